#include "cyclicpir/cyclic_code.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cyclicpir {

namespace {

void require_semisimple(std::uint32_t n, std::uint32_t q) {
  if (n == 0) throw CodeError("code length must be positive");
  if (!is_prime(q)) throw CodeError("q must be prime");
  if (std::gcd(n, q) != 1) {
    throw CodeError("gcd(n, q) must be 1 (n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")");
  }
}

bool is_q_closed(const ResidueSet& s, std::uint32_t q) {
  return s.scaled(q % s.modulus()) == s || s.modulus() == 1;
}

}  // namespace

CyclicCodeSpec CyclicCodeSpec::from_generating_set(std::uint32_t q, ResidueSet generating) {
  require_semisimple(generating.modulus(), q);
  if (!is_q_closed(generating, q)) {
    throw CodeError("generating set is not a union of cyclotomic cosets");
  }
  return CyclicCodeSpec(q, std::move(generating));
}

CyclicCodeSpec CyclicCodeSpec::from_defining_set(std::uint32_t q, const ResidueSet& defining) {
  return from_generating_set(q, defining.complement());
}

std::vector<std::uint32_t> CyclicCodeSpec::coset_labels() const {
  std::vector<std::uint32_t> labels;
  ResidueSet seen(n());
  for (auto e : generating_.elements()) {
    if (seen.contains(e)) continue;
    for (auto x : cyclotomic_coset(e, n(), q_)) seen.insert(x);
    labels.push_back(e);  // elements() is ascending, so e is the coset minimum
  }
  return labels;
}

std::string CyclicCodeSpec::label() const {
  std::ostringstream out;
  out << "U{";
  bool first = true;
  for (auto l : coset_labels()) {
    if (!first) out << ',';
    first = false;
    out << l;
  }
  out << '}';
  return out.str();
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t n, std::uint32_t q) {
  require_semisimple(n, q);
  std::vector<std::uint32_t> out;
  const std::uint32_t start = s % n;
  std::uint32_t x = start;
  do {
    out.push_back(x);
    x = static_cast<std::uint32_t>(std::uint64_t{x} * q % n);
  } while (x != start);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> coset_representatives(std::uint32_t n, std::uint32_t q) {
  require_semisimple(n, q);
  std::vector<std::uint32_t> reps;
  ResidueSet seen(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    for (auto x : cyclotomic_coset(s, n, q)) seen.insert(x);
    reps.push_back(s);
  }
  return reps;
}

std::uint32_t coset_leader(std::uint32_t s, std::uint32_t n, std::uint32_t q) {
  return cyclotomic_coset(s, n, q).front();
}

CyclicCodeSpec code_from_cosets(std::span<const std::uint32_t> reps, std::uint32_t n,
                                std::uint32_t q) {
  require_semisimple(n, q);
  ResidueSet generating(n);
  for (auto r : reps) {
    for (auto x : cyclotomic_coset(r, n, q)) generating.insert(x);
  }
  return CyclicCodeSpec::from_generating_set(q, std::move(generating));
}

CyclicCodeSpec dual_code(const CyclicCodeSpec& c) {
  return CyclicCodeSpec::from_generating_set(c.q(), c.generating_set().negated().complement());
}

CyclicCodeSpec star_product(const CyclicCodeSpec& c1, const CyclicCodeSpec& c2) {
  if (c1.n() != c2.n() || c1.q() != c2.q()) {
    throw CodeError("star product of codes with different (n, q)");
  }
  auto sum = c1.generating_set().minkowski_sum(c2.generating_set());
  if (!is_q_closed(sum, c1.q())) throw CodeError("internal: Minkowski sum not q-closed");
  return CyclicCodeSpec::from_generating_set(c1.q(), std::move(sum));
}

std::uint32_t bch_bound(const CyclicCodeSpec& c) {
  return c.defining_set().longest_cyclic_run() + 1;
}

BasePolynomial generator_polynomial(const CyclicCodeSpec& c, const FieldSpec& field) {
  if (field.characteristic() != c.q()) throw CodeError("field characteristic differs from q");
  if (field.order() % c.n() != 0) {
    throw CodeError("field too small: n = " + std::to_string(c.n()) + " does not divide " +
                    std::to_string(field.order()));
  }
  BasePolynomial g(c.q(), {1});
  const auto defining = c.defining_set();
  ResidueSet seen(c.n());
  for (auto j : defining.elements()) {
    if (seen.contains(j)) continue;
    const auto coset = cyclotomic_coset(j, c.n(), c.q());
    for (auto x : coset) seen.insert(x);
    g = g * minimal_polynomial(coset, field, c.n());
  }
  return g;
}

BasePolynomial generator_polynomial(const CyclicCodeSpec& c) {
  return generator_polynomial(c, *field_for_length(c.q(), c.n()));
}

Matrix generator_matrix(const CyclicCodeSpec& c, const FieldSpec& field) {
  const auto g = generator_polynomial(c, field);
  const std::size_t n = c.n(), k = c.dimension();
  Matrix m(c.q(), k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      m(i, (i + j) % n) = static_cast<std::uint8_t>(g.coeffs()[j]);
    }
  }
  if (m.rank() != k) throw CodeError("internal: generator matrix is rank deficient");
  return m;
}

Matrix generator_matrix(const CyclicCodeSpec& c) {
  return generator_matrix(c, *field_for_length(c.q(), c.n()));
}

// ---------------------------------------------------------------------------

SpecParseError::SpecParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SpecParseError(start, "expected a key (q, n or cosets)");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw SpecParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint32_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xFFFFFFFFull) throw SpecParseError(start, "integer too large");
      ++pos_;
    }
    if (start == pos_) throw SpecParseError(start, "expected an integer");
    return static_cast<std::uint32_t>(v);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CodeSpecText parse_code_spec_text(std::string_view text) {
  Scanner sc(text);
  CodeSpecText out;
  bool have_q = false, have_n = false, have_cosets = false;
  std::vector<std::size_t> coset_positions;
  while (!sc.done()) {
    const std::size_t key_pos = sc.pos();
    const auto key = sc.identifier();
    sc.expect('=');
    if (key == "q") {
      if (have_q) throw SpecParseError(key_pos, "duplicate key 'q'");
      out.q = sc.integer();
      have_q = true;
    } else if (key == "n") {
      if (have_n) throw SpecParseError(key_pos, "duplicate key 'n'");
      out.n = sc.integer();
      have_n = true;
    } else if (key == "cosets") {
      if (have_cosets) throw SpecParseError(key_pos, "duplicate key 'cosets'");
      have_cosets = true;
      sc.skip_ws();
      if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        while (true) {
          sc.skip_ws();
          coset_positions.push_back(sc.pos());
          out.cosets.push_back(sc.integer());
          sc.skip_ws();
          if (sc.peek() != ',') break;
          sc.expect(',');
        }
      }
    } else {
      throw SpecParseError(key_pos, "unknown key '" + key + "'");
    }
  }
  if (!have_q) throw SpecParseError(text.size(), "missing key 'q'");
  if (!have_n) throw SpecParseError(text.size(), "missing key 'n'");
  if (!have_cosets) throw SpecParseError(text.size(), "missing key 'cosets'");
  if (out.n == 0) throw SpecParseError(0, "n must be positive");
  for (std::size_t i = 0; i < out.cosets.size(); ++i) {
    if (out.cosets[i] >= out.n) {
      throw SpecParseError(coset_positions[i], "coset representative " +
                                                   std::to_string(out.cosets[i]) + " is not below n");
    }
  }
  return out;
}

CyclicCodeSpec parse_code_spec(std::string_view text, bool defining) {
  const auto parsed = parse_code_spec_text(text);
  auto c = code_from_cosets(parsed.cosets, parsed.n, parsed.q);
  if (defining) return CyclicCodeSpec::from_defining_set(parsed.q, c.generating_set());
  return c;
}

std::string format_code_spec(const CyclicCodeSpec& c) {
  std::ostringstream out;
  out << "q=" << c.q() << " n=" << c.n() << " cosets=";
  bool first = true;
  for (auto l : c.coset_labels()) {
    if (!first) out << ',';
    first = false;
    out << l;
  }
  return out.str();
}

}  // namespace cyclicpir
