#include "report_io.hpp"

#include <cstdio>
#include <optional>

namespace twinsieve::cli {

namespace {

ordered_json opt_json(const std::optional<i64>& v) {
  if (!v) return nullptr;
  return *v;
}

void csv_cell(std::string& row, const std::optional<i64>& v) {
  row += ',';
  if (v) row += std::to_string(*v);
}

void text_cell(std::string& row, const char* key, const std::optional<i64>& v) {
  row += ' ';
  row += key;
  row += '=';
  row += v ? std::to_string(*v) : "-";
}

BigInt pow10_big(int k) {
  BigInt r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

}  // namespace

ordered_json json_u128(u128 v) {
  if (v <= u128(~u64(0))) return ordered_json(static_cast<u64>(v));
  return ordered_json(to_string(v));
}

ordered_json report_json(const CountReport& r) {
  ordered_json o;
  o["j"] = r.j;
  o["k_max"] = r.k_max;
  o["a"] = r.a;
  o["gamma"] = r.gamma;
  o["b_oracle"] = r.b_oracle;
  o["b_exact"] = r.b_exact;
  o["b_ie_repaired"] = r.b_ie_repaired;
  o["b_ie_printed"] = opt_json(r.b_ie_printed);
  o["b_mobius_printed"] = opt_json(r.b_mobius_printed);
  o["psi_oracle"] = r.psi_oracle;
  o["psi_ie"] = opt_json(r.psi_ie);
  o["pi_oracle"] = r.pi_oracle;
  o["pi_via_identity"] = r.pi_via_identity;
  o["xi_oracle"] = r.xi_oracle;
  return o;
}

std::string report_csv_header() {
  return "j,k_max,a,gamma,b_oracle,b_exact,b_ie_repaired,b_ie_printed,"
         "b_mobius_printed,psi_oracle,psi_ie,pi_oracle,pi_via_identity,xi_oracle";
}

std::string report_csv_row(const CountReport& r) {
  std::string s = std::to_string(r.j);
  s += ',';
  s += std::to_string(r.k_max);
  s += ',';
  s += std::to_string(r.a);
  s += ',';
  s += std::to_string(r.gamma);
  s += ',';
  s += std::to_string(r.b_oracle);
  s += ',';
  s += std::to_string(r.b_exact);
  s += ',';
  s += std::to_string(r.b_ie_repaired);
  csv_cell(s, r.b_ie_printed);
  csv_cell(s, r.b_mobius_printed);
  s += ',';
  s += std::to_string(r.psi_oracle);
  csv_cell(s, r.psi_ie);
  s += ',';
  s += std::to_string(r.pi_oracle);
  s += ',';
  s += std::to_string(r.pi_via_identity);
  s += ',';
  s += std::to_string(r.xi_oracle);
  return s;
}

std::string report_text_row(const CountReport& r) {
  std::string s = "j=" + std::to_string(r.j);
  s += " k_max=" + std::to_string(r.k_max);
  s += " a=" + std::to_string(r.a);
  s += " gamma=" + std::to_string(r.gamma);
  s += " b_oracle=" + std::to_string(r.b_oracle);
  s += " b_exact=" + std::to_string(r.b_exact);
  s += " b_ie_repaired=" + std::to_string(r.b_ie_repaired);
  text_cell(s, "b_ie_printed", r.b_ie_printed);
  text_cell(s, "b_mobius_printed", r.b_mobius_printed);
  s += " psi_oracle=" + std::to_string(r.psi_oracle);
  text_cell(s, "psi_ie", r.psi_ie);
  s += " pi_oracle=" + std::to_string(r.pi_oracle);
  s += " pi_via_identity=" + std::to_string(r.pi_via_identity);
  s += " xi_oracle=" + std::to_string(r.xi_oracle);
  return s;
}

std::string format_fixed15(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0 into +0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

std::string format_double_sig15(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_rational_sig15(const ExactRational& v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  BigInt n = boost::multiprecision::numerator(v);
  BigInt d = boost::multiprecision::denominator(v);
  if (n < 0) n = -n;

  // Decimal exponent e with 10^e <= n/d < 10^(e+1), by integer comparison.
  int e = 0;
  if (n >= d) {
    BigInt t = d;
    while (n >= t * 10) t *= 10, ++e;
  } else {
    BigInt t = n;
    while (t < d) t *= 10, --e;
  }

  // q = round(n/d * 10^(14-e)): the 15 leading decimal digits.
  BigInt num = n, den = d;
  const int shift = 14 - e;
  if (shift >= 0)
    num *= pow10_big(shift);
  else
    den *= pow10_big(-shift);
  BigInt q = num / den;
  if ((num % den) * 2 >= den) ++q;
  if (q >= pow10_big(15)) q /= 10, ++e;  // rounding carried into a 16th digit

  std::string digits = q.str();
  digits.erase(digits.find_last_not_of('0') + 1);

  std::string s;
  if (e >= 0) {
    const std::size_t ip = static_cast<std::size_t>(e) + 1;
    if (digits.size() <= ip) {
      s = digits;
      s.append(ip - digits.size(), '0');
    } else {
      s = digits.substr(0, ip) + "." + digits.substr(ip);
    }
  } else {
    s = "0.";
    s.append(static_cast<std::size_t>(-e) - 1, '0');
    s += digits;
  }
  return neg ? "-" + s : s;
}

}  // namespace twinsieve::cli
