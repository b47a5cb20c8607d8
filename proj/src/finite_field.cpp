#include "cyclicpir/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cyclicpir {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) works.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Powers of x modulo a monic degree-s polynomial, in base-p vector encoding.
// Returns an empty table if x does not generate a group of order p^s - 1.
std::vector<std::uint32_t> power_table(std::uint32_t p, std::uint32_t s,
                                       const BasePolynomial& f) {
  const std::uint32_t size = [&] {
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < s; ++i) v *= p;
    return v;
  }();
  const std::uint32_t order = size - 1;
  std::vector<std::uint32_t> table(order);
  if (s == 1) {
    // GF(p): need a primitive root; the polynomial is x - a, so x == a.
    const std::uint32_t a = (p - f.coeff(0)) % p;
    if (a == 0) return {};
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
      if (i > 0 && v == 1) return {};
      table[i] = static_cast<std::uint32_t>(v);
      v = v * a % p;
    }
    if (v != 1) return {};
    return table;
  }

  std::vector<std::uint32_t> digits(s + 1, 0);
  digits[0] = 1;
  auto encode = [&] {
    std::uint32_t v = 0;
    for (std::uint32_t i = s; i-- > 0;) v = v * p + digits[i];
    return v;
  };
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t v = encode();
    if (i > 0 && v == 1) return {};
    table[i] = v;
    // multiply by x, then reduce x^s = -(f_0 + ... + f_{s-1} x^{s-1})
    for (std::uint32_t d = s; d > 0; --d) digits[d] = digits[d - 1];
    digits[0] = 0;
    const std::uint32_t top = digits[s];
    if (top != 0) {
      for (std::uint32_t d = 0; d < s; ++d) {
        digits[d] = static_cast<std::uint32_t>(
            (digits[d] + std::uint64_t{p - f.coeff(d)} * top) % p);
      }
      digits[s] = 0;
    }
  }
  if (encode() != 1) return {};
  return table;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// BasePolynomial

BasePolynomial::BasePolynomial(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (!is_prime(p)) throw FieldError("polynomial characteristic must be prime");
  for (auto& c : coeffs_) c %= p_;
  trim();
}

BasePolynomial BasePolynomial::monomial(std::uint32_t p, std::size_t degree,
                                        std::uint32_t coeff) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return BasePolynomial(p, std::move(c));
}

BasePolynomial BasePolynomial::x_pow_minus_one(std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> c(n + 1, 0);
  c[n] = 1;
  c[0] = p - 1;
  return BasePolynomial(p, std::move(c));
}

void BasePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void BasePolynomial::check_same_field(const BasePolynomial& other) const {
  if (p_ != other.p_) throw FieldError("polynomials over different prime fields");
}

BasePolynomial BasePolynomial::operator+(const BasePolynomial& other) const {
  check_same_field(other);
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + other.coeff(i)) % p_;
  return BasePolynomial(p_, std::move(c));
}

BasePolynomial BasePolynomial::operator-(const BasePolynomial& other) const {
  check_same_field(other);
  std::vector<std::uint32_t> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(i) + p_ - other.coeff(i)) % p_;
  return BasePolynomial(p_, std::move(c));
}

BasePolynomial BasePolynomial::operator*(const BasePolynomial& other) const {
  check_same_field(other);
  if (is_zero() || other.is_zero()) return BasePolynomial(p_, {});
  std::vector<std::uint64_t> acc(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{coeffs_[i]} * other.coeffs_[j]) % p_;
    }
  }
  return BasePolynomial(p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

BasePolynomial::DivMod BasePolynomial::divmod(const BasePolynomial& divisor) const {
  check_same_field(divisor);
  if (divisor.is_zero()) throw FieldError("polynomial division by zero");
  std::vector<std::uint32_t> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {BasePolynomial(p_, {}), *this};
  std::vector<std::uint32_t> quot(rem.size() - dd, 0);
  const std::uint32_t lead_inv = mod_inverse(divisor.coeffs_.back(), p_);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const std::uint32_t factor =
        static_cast<std::uint32_t>(std::uint64_t{rem[i]} * lead_inv % p_);
    if (factor == 0) continue;
    quot[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::uint64_t sub = std::uint64_t{factor} * divisor.coeffs_[j] % p_;
      rem[i - dd + j] = static_cast<std::uint32_t>((rem[i - dd + j] + p_ - sub) % p_);
    }
  }
  return {BasePolynomial(p_, std::move(quot)), BasePolynomial(p_, std::move(rem))};
}

bool BasePolynomial::divides(const BasePolynomial& other) const {
  return other.divmod(*this).remainder.is_zero();
}

std::string BasePolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// FieldSpec

BasePolynomial builtin_primitive_polynomial(std::uint32_t s) {
  // Exponents of the nonzero terms below the leading x^s.
  static const std::vector<std::vector<std::uint32_t>> kLowTerms = {
      {},                // unused
      {0},               // x + 1
      {1, 0},            // x^2 + x + 1
      {1, 0},            // x^3 + x + 1
      {1, 0},            // x^4 + x + 1
      {2, 0},            // x^5 + x^2 + 1
      {1, 0},            // x^6 + x + 1
      {3, 0},            // x^7 + x^3 + 1
      {4, 3, 2, 0},      // x^8 + x^4 + x^3 + x^2 + 1
      {4, 0},            // x^9 + x^4 + 1
      {3, 0},            // x^10 + x^3 + 1
      {2, 0},            // x^11 + x^2 + 1
      {6, 4, 1, 0},      // x^12 + x^6 + x^4 + x + 1
      {4, 3, 1, 0},      // x^13 + x^4 + x^3 + x + 1
      {10, 6, 1, 0},     // x^14 + x^10 + x^6 + x + 1
      {1, 0},            // x^15 + x + 1
      {12, 3, 1, 0},     // x^16 + x^12 + x^3 + x + 1
  };
  if (s == 0 || s >= kLowTerms.size()) {
    throw FieldError("no built-in primitive polynomial for GF(2^" + std::to_string(s) + ")");
  }
  std::vector<std::uint32_t> c(s + 1, 0);
  c[s] = 1;
  for (auto e : kLowTerms[s]) c[e] = 1;
  return BasePolynomial(2, std::move(c));
}

FieldPtr FieldSpec::build(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw FieldError("field characteristic must be prime");
  if (s == 0) throw FieldError("extension degree must be positive");
  if (p == 2 && s <= 16) return build(p, s, builtin_primitive_polynomial(s));

  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    size *= p;
    if (size > kMaxFieldSize) {
      throw FieldError("field too large: " + std::to_string(p) + "^" + std::to_string(s) +
                       " exceeds 2^20 elements");
    }
  }
  // Lexicographic search over monic polynomials with nonzero constant term.
  std::vector<std::uint32_t> low(s, 0);
  low[0] = 1;
  while (true) {
    std::vector<std::uint32_t> c(low);
    c.push_back(1);
    BasePolynomial f(p, c);
    if (!power_table(p, s, f).empty()) return build(p, s, f);
    std::size_t i = 0;
    while (i < s) {
      if (++low[i] < p) break;
      low[i] = (i == 0) ? 1 : 0;
      ++i;
    }
    if (i == s) throw FieldError("no primitive polynomial found");
  }
}

FieldPtr FieldSpec::build(std::uint32_t p, std::uint32_t s, const BasePolynomial& primitive) {
  if (!is_prime(p)) throw FieldError("field characteristic must be prime");
  if (s == 0) throw FieldError("extension degree must be positive");
  if (primitive.characteristic() != p || primitive.degree() != static_cast<int>(s) ||
      primitive.coeffs().back() != 1) {
    throw FieldError("primitive polynomial must be monic of degree s over GF(p)");
  }
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    size *= p;
    if (size > kMaxFieldSize) {
      throw FieldError("field too large: " + std::to_string(p) + "^" + std::to_string(s) +
                       " exceeds 2^20 elements");
    }
  }

  auto table = power_table(p, s, primitive);
  if (table.empty()) {
    throw FieldError("polynomial " + primitive.to_string() + " is not primitive over GF(" +
                     std::to_string(p) + ")");
  }

  std::shared_ptr<FieldSpec> f(new FieldSpec());
  f->p_ = p;
  f->s_ = s;
  f->size_ = static_cast<std::uint32_t>(size);
  f->primitive_ = primitive;
  f->antilog_ = std::move(table);
  f->log_.assign(f->size_, kZero);
  for (std::uint32_t i = 0; i < f->order(); ++i) f->log_[f->antilog_[i]] = i;
  f->prime_codes_.resize(p);
  f->prime_codes_[0] = kZero;
  for (std::uint32_t c = 1; c < p; ++c) f->prime_codes_[c] = f->log_[c];
  return f;
}

std::uint32_t FieldSpec::add_vectors(std::uint32_t x, std::uint32_t y) const {
  if (p_ == 2) return x ^ y;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < s_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (a == kZero) return b;
  if (b == kZero) return a;
  const std::uint32_t v = add_vectors(antilog_[a], antilog_[b]);
  return v == 0 ? kZero : log_[v];
}

std::uint32_t FieldSpec::negate(std::uint32_t a) const {
  if (a == kZero || p_ == 2) return a;
  // -1 = alpha^(order/2) for odd characteristic.
  return static_cast<std::uint32_t>((std::uint64_t{a} + order() / 2) % order());
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == kZero || b == kZero) return kZero;
  return static_cast<std::uint32_t>((std::uint64_t{a} + b) % order());
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == kZero) throw FieldError("inverse of zero");
  return a == 0 ? 0 : order() - a;
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::int64_t e) const {
  if (a == kZero) {
    if (e > 0) return kZero;
    if (e == 0) return 0;
    throw FieldError("negative power of zero");
  }
  const std::int64_t ord = order();
  std::int64_t r = static_cast<std::int64_t>(a) * (e % ord) % ord;
  if (r < 0) r += ord;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FieldSpec::from_prime(std::uint32_t c) const { return prime_codes_[c % p_]; }

bool FieldSpec::in_prime_field(std::uint32_t code) const {
  return code == kZero || antilog_[code] < p_;
}

std::uint32_t FieldSpec::to_prime(std::uint32_t code) const {
  if (code == kZero) return 0;
  const std::uint32_t v = antilog_[code];
  if (v >= p_) throw FieldError("element is not in the prime field");
  return v;
}

std::uint32_t splitting_degree(std::uint32_t p, std::uint32_t n) {
  if (n == 0) throw FieldError("length must be positive");
  if (std::gcd(p, n) != 1) throw FieldError("gcd(n, q) must be 1");
  if (n == 1) return 1;
  std::uint64_t v = p % n;
  std::uint32_t s = 1;
  while (v != 1) {
    v = v * p % n;
    ++s;
  }
  return s;
}

FieldPtr field_for_length(std::uint32_t p, std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  const std::uint32_t s = splitting_degree(p, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, s}];
  if (!slot) slot = FieldSpec::build(p, s);
  return slot;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, std::uint32_t code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw FieldError("field element without a field");
  if (code_ != FieldSpec::kZero && code_ >= field_->order()) {
    throw FieldError("field element code out of range");
  }
}

FieldElement FieldElement::alpha_power(FieldPtr field, std::int64_t i) {
  const std::int64_t ord = field->order();
  const auto code = static_cast<std::uint32_t>(((i % ord) + ord) % ord);
  return {std::move(field), code};
}

FieldElement FieldElement::from_vector(FieldPtr field, std::uint32_t vector) {
  if (vector >= field->size()) throw FieldError("vector out of range for field");
  const std::uint32_t code = vector == 0 ? FieldSpec::kZero : field->log(vector);
  return {std::move(field), code};
}

std::uint32_t FieldElement::to_vector() const {
  return is_zero() ? 0 : field_->antilog(code_);
}

void FieldElement::check_same_field(const FieldElement& b) const {
  if (field_ != b.field_ &&
      (field_->characteristic() != b.field_->characteristic() ||
       field_->primitive_polynomial() != b.field_->primitive_polynomial())) {
    throw FieldError("operands belong to different fields");
  }
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->add(code_, b.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->sub(code_, b.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->mul(code_, b.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  check_same_field(b);
  return {field_, field_->mul(code_, field_->inv(b.code_))};
}

FieldElement FieldElement::operator-() const { return {field_, field_->negate(code_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }

bool FieldElement::operator==(const FieldElement& b) const {
  check_same_field(b);
  return code_ == b.code_;
}

// ---------------------------------------------------------------------------

BasePolynomial minimal_polynomial(std::span<const std::uint32_t> coset, const FieldSpec& field,
                                  std::uint32_t n) {
  if (n == 0 || field.order() % n != 0) {
    throw FieldError("n = " + std::to_string(n) + " does not divide the field order " +
                     std::to_string(field.order()));
  }
  if (coset.empty()) throw FieldError("empty coset");
  const std::uint32_t p = field.characteristic();

  // The coset must be exactly the orbit of its first element under i -> p*i.
  std::vector<std::uint32_t> orbit;
  std::uint32_t x = coset[0] % n;
  do {
    orbit.push_back(x);
    x = static_cast<std::uint32_t>(std::uint64_t{x} * p % n);
  } while (x != coset[0] % n);
  std::vector<std::uint32_t> given(coset.begin(), coset.end());
  for (auto& g : given) g %= n;
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  std::sort(orbit.begin(), orbit.end());
  if (given != orbit) throw FieldError("residue set is not a single cyclotomic coset");

  const std::uint32_t step = field.order() / n;  // beta = alpha^step
  std::vector<std::uint32_t> poly{0};             // the constant 1
  for (std::uint32_t j : orbit) {
    const std::uint32_t root = static_cast<std::uint32_t>(std::uint64_t{j} * step % field.order());
    const std::uint32_t neg_root = field.negate(root);
    std::vector<std::uint32_t> next(poly.size() + 1, FieldSpec::kZero);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = field.add(next[i + 1], poly[i]);
      next[i] = field.add(next[i], field.mul(neg_root, poly[i]));
    }
    poly = std::move(next);
  }
  std::vector<std::uint32_t> coeffs(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) coeffs[i] = field.to_prime(poly[i]);
  return BasePolynomial(p, std::move(coeffs));
}

}  // namespace cyclicpir
