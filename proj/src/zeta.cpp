#include "ffcount/zeta.hpp"

#include "ffcount/finite_field.hpp"
#include "ffcount/places.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace ffc {

CurveDescriptor CurveDescriptor::make(std::int64_t q, int genus, std::vector<BigInt> L,
                                      std::optional<ClassDimsTable> class_dims) {
  if (q < 2 || q > 256) throw std::invalid_argument("q must be a prime power in 2..256");
  prime_power_decomposition(static_cast<unsigned>(q));
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  if (L.size() != static_cast<std::size_t>(2 * genus + 1))
    throw std::invalid_argument("L must have exactly 2g+1 coefficients");
  if (L[0] != 1) throw std::invalid_argument("L(0) must be 1");
  for (int i = 0; i <= genus; ++i)
    if (L[2 * genus - i] != ipow(q, genus - i) * L[i])
      throw std::invalid_argument("functional equation fails at coefficient " + std::to_string(2 * genus - i));
  CurveDescriptor d;
  d.q_ = q;
  d.g_ = genus;
  d.L_ = std::move(L);
  d.J_ = 0;
  for (const BigInt& c : d.L_) d.J_ += c;
  if (d.J_ < 1) throw std::invalid_argument("class number L(1) must be >= 1");
  if (class_dims) {
    if (genus == 0) throw std::invalid_argument("class_dims is only meaningful for g >= 1");
    if (class_dims->size() != static_cast<std::size_t>(2 * genus - 1))
      throw std::invalid_argument("class_dims needs one row per degree 0..2g-2");
    for (const auto& row : *class_dims)
      if (BigInt(row.size()) != d.J_) throw std::invalid_argument("each class_dims row needs J entries");
  }
  d.dims_ = std::move(class_dims);
  return d;
}

int CurveDescriptor::class_count() const {
  if (J_ > 1'000'000) throw Refusal("class number too large for an explicit class model");
  return J_.convert_to<int>();
}

Rational eval_L(const CurveDescriptor& desc, const Rational& x) {
  Rational acc = 0;
  for (auto it = desc.L().rbegin(); it != desc.L().rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Rational eval_Z(const CurveDescriptor& desc, const Rational& x) {
  const Rational den = (1 - x) * (1 - desc.q() * x);
  if (den == 0) throw std::domain_error("Z(t) has a pole at this argument");
  return eval_L(desc, x) / den;
}

std::vector<BigInt> a_seq(const CurveDescriptor& desc, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  std::vector<BigInt> out(static_cast<std::size_t>(l_max) + 1, 0);
  for (int l = 0; l <= l_max && l < static_cast<int>(desc.L().size()); ++l) out[l] = desc.L()[l];
  // divide by (1 - t): prefix sums; then by (1 - q t).
  for (int l = 1; l <= l_max; ++l) out[l] += out[l - 1];
  for (int l = 1; l <= l_max; ++l) out[l] += desc.q() * out[l - 1];
  return out;
}

std::vector<BigInt> b_seq(const CurveDescriptor& desc, int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be >= 0");
  const auto& L = desc.L();
  std::vector<BigInt> inv(static_cast<std::size_t>(l_max) + 1, 0);
  inv[0] = 1;
  for (int l = 1; l <= l_max; ++l) {
    BigInt acc = 0;
    for (int k = 1; k <= l && k < static_cast<int>(L.size()); ++k) acc += L[k] * inv[l - k];
    inv[l] = -acc;
  }
  // multiply by (1 - t)(1 - q t) = 1 - (q+1) t + q t^2
  std::vector<BigInt> out(inv.size(), 0);
  for (int l = 0; l <= l_max; ++l) {
    out[l] = inv[l];
    if (l >= 1) out[l] -= (desc.q() + 1) * inv[l - 1];
    if (l >= 2) out[l] += desc.q() * inv[l - 2];
  }
  return out;
}

Rational zeta_value(const CurveDescriptor& desc, std::int64_t s) {
  if (s < 2) throw std::domain_error("zeta is evaluated only at integers s >= 2");
  return eval_Z(desc, qpow(desc.q(), -s));
}

Rational schanuel_constant(const CurveDescriptor& desc, std::int64_t n) {
  if (n < 2) throw std::domain_error("Schanuel constant needs n >= 2");
  return Rational(desc.J()) / (Rational(desc.q() - 1) * zeta_value(desc, n) * qpow(desc.q(), n * (desc.genus() - 1)));
}

EulerProductResult euler_product_truncation(std::int64_t q, std::int64_t s, int cutoff) {
  if (s < 2) throw std::domain_error("Euler product needs s >= 2");
  if (cutoff < 0) throw std::invalid_argument("degree cutoff must be >= 0");
  const CurveDescriptor desc = CurveDescriptor::rational(q);
  EulerProductResult r;
  r.q = q;
  r.s = s;
  r.cutoff = cutoff;
  r.closed_form = zeta_value(desc, s);

  std::vector<BigInt> places;
  double bits = 0;
  for (int k = 1; k <= cutoff; ++k) {
    places.push_back(place_count(q, k));
    bits += places.back().convert_to<double>() * static_cast<double>(s * k) * std::log2(static_cast<double>(q));
  }

  HighPrecision log_sum = 0;
  for (int k = 1; k <= cutoff; ++k) {
    const HighPrecision x = boost::multiprecision::pow(HighPrecision(q), HighPrecision(-s * k));
    log_sum -= HighPrecision(places[k - 1]) * boost::multiprecision::log1p(-x);
  }
  r.value = boost::multiprecision::exp(log_sum);

  if (bits <= static_cast<double>(1 << 22)) {
    BigInt num = 1;
    BigInt den = 1;
    for (int k = 1; k <= cutoff; ++k) {
      const BigInt qk = ipow(q, s * k);
      const unsigned e = places[k - 1].convert_to<unsigned>();
      num *= boost::multiprecision::pow(qk, e);
      den *= boost::multiprecision::pow(qk - 1, e);
    }
    r.exact = Rational(num, den);
    r.value = HighPrecision(*r.exact);
  }

  // Every effective divisor of degree <= D is supported on places of
  // degree <= D, so the truncation misses at most the degree > D terms.
  const Rational x = qpow(q, -s);
  Rational head = 0;
  const auto a = a_seq(desc, cutoff);
  for (int l = cutoff; l >= 0; --l) head = head * x + Rational(a[l]);
  r.tail_bound = r.closed_form - head;

  if (r.exact) {
    const Rational diff = r.closed_form - *r.exact;
    r.difference = HighPrecision(diff);
    r.within_certificate = diff >= 0 && diff <= r.tail_bound;
  } else {
    r.difference = HighPrecision(r.closed_form) - r.value;
    r.within_certificate = r.difference >= 0 && r.difference <= HighPrecision(r.tail_bound);
  }
  return r;
}

std::pair<BigInt, BigInt> sqrt_binomial(std::int64_t q, int genus) {
  // (sqrt q + 1)^{2g} = sum_k C(2g,k) q^{k/2}: even k go to A, odd k to B.
  BigInt A = 0, B = 0, binom = 1;
  const int n = 2 * genus;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    if (k % 2 == 0)
      A += binom * ipow(q, k / 2);
    else
      B += binom * ipow(q, (k - 1) / 2);
  }
  return {A, B};
}

HasseWeilReport hasse_weil_check(std::int64_t q, int genus, const std::vector<BigInt>& L) {
  HasseWeilReport rep;
  rep.functional_equation = L.size() == static_cast<std::size_t>(2 * genus + 1) && !L.empty() && L[0] == 1;
  for (int i = 0; rep.functional_equation && i <= genus; ++i)
    if (L[2 * genus - i] != ipow(q, genus - i) * L[i]) rep.functional_equation = false;
  if (!rep.functional_equation) {
    rep.failures.push_back("functional equation q^g t^{2g} L(1/(qt)) = L(t) fails");
    return rep;
  }
  BigInt J = 0;
  for (const BigInt& c : L) J += c;
  const auto [A, B] = sqrt_binomial(q, genus);
  const BigInt Bsq_q = B * B * q;
  // J <= A + B sqrt q
  rep.upper_bound = J <= A || (J - A) * (J - A) <= Bsq_q;
  // A - B sqrt q <= J
  rep.lower_bound = A <= J || (A - J) * (A - J) <= Bsq_q;
  const BigInt c1 = genus > 0 ? L[1] : BigInt(0);
  rep.c1_bound = c1 * c1 <= BigInt(4) * genus * genus * q;
  if (!rep.upper_bound) rep.failures.push_back("J = " + J.str() + " exceeds (sqrt q + 1)^{2g}");
  if (!rep.lower_bound) rep.failures.push_back("J = " + J.str() + " is below (sqrt q - 1)^{2g}");
  if (!rep.c1_bound) rep.failures.push_back("|c_1| = |" + c1.str() + "| exceeds 2g sqrt q");
  return rep;
}

HasseWeilReport hasse_weil_check(const CurveDescriptor& desc) {
  return hasse_weil_check(desc.q(), desc.genus(), desc.L());
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

long long parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DescriptorParseError(line, "not an integer: '" + s + "'");
  }
}

BigInt parse_bigint(const std::string& s, int line) {
  const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw DescriptorParseError(line, "not an integer: '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

CurveDescriptor parse_descriptor(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw DescriptorParseError(line, "expected 'key = value'");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    if (key != "q" && key != "g" && key != "L_coeffs" && key != "class_dims")
      throw DescriptorParseError(line, "unknown key '" + key + "'");
    if (value.empty()) throw DescriptorParseError(line, "empty value for '" + key + "'");
    if (!kv.emplace(key, std::make_pair(value, line)).second)
      throw DescriptorParseError(line, "duplicate key '" + key + "'");
  }
  for (const char* required : {"q", "g", "L_coeffs"})
    if (!kv.count(required)) throw DescriptorParseError(line + 1, std::string("missing key '") + required + "'");

  const auto& [qs, qline] = kv["q"];
  const auto& [gs, gline] = kv["g"];
  const long long q = parse_int(qs, qline);
  const long long g = parse_int(gs, gline);
  if (g < 0 || g > 64) throw DescriptorParseError(gline, "genus out of range");

  const auto& [ls, lline] = kv["L_coeffs"];
  std::vector<BigInt> L;
  for (const auto& tok : split(ls, ',')) L.push_back(parse_bigint(tok, lline));

  std::optional<ClassDimsTable> dims;
  if (auto it = kv.find("class_dims"); it != kv.end()) {
    const auto& [ds, dline] = it->second;
    ClassDimsTable table;
    for (const auto& row : split(ds, ';')) {
      std::vector<int> r;
      for (const auto& tok : split(row, ',')) {
        const long long v = parse_int(tok, dline);
        if (v < 0 || v > 1'000'000) throw DescriptorParseError(dline, "dimension out of range: " + tok);
        r.push_back(static_cast<int>(v));
      }
      table.push_back(std::move(r));
    }
    dims = std::move(table);
  }

  try {
    return CurveDescriptor::make(q, static_cast<int>(g), std::move(L), std::move(dims));
  } catch (const std::invalid_argument& e) {
    const int where = std::string(e.what()).find("class_dims") != std::string::npos && kv.count("class_dims")
                          ? kv["class_dims"].second
                      : std::string(e.what()).find('q') == 0 ? qline
                                                              : lline;
    throw DescriptorParseError(where, e.what());
  }
}

std::string format_descriptor(const CurveDescriptor& desc) {
  std::ostringstream os;
  os << "q = " << desc.q() << "\n";
  os << "g = " << desc.genus() << "\n";
  os << "L_coeffs = ";
  for (std::size_t i = 0; i < desc.L().size(); ++i) os << (i ? "," : "") << desc.L()[i];
  os << "\n";
  if (desc.class_dims()) {
    os << "class_dims = ";
    const auto& t = *desc.class_dims();
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) os << ";";
      for (std::size_t j = 0; j < t[i].size(); ++j) os << (j ? "," : "") << t[i][j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace ffc
