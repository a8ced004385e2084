#include <json.hpp>

#include "qkz/ellspace.hpp"
#include "qkz/errors.hpp"

namespace qkz {
namespace {

using nlohmann::json;

json rat(const Rational& r) { return json::array({r.numerator(), r.denominator()}); }

Rational rat_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_array() || j.size() != 2) throw DomainError("rational must be an integer or [num, den]");
  const long long den = j[1].get<long long>();
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(j[0].get<long long>(), den);
}

json scalar(const QScalar& s) {
  return json{{"coeff", json::array({s.coeff.real(), s.coeff.imag()})}, {"qexp", rat(s.qexp)}, {"pexp", rat(s.pexp)}};
}

QScalar scalar_from(const json& j) {
  QScalar s;
  if (j.contains("coeff")) {
    const auto& c = j.at("coeff");
    s.coeff = c.is_array() ? cplx{c.at(0).get<double>(), c.at(1).get<double>()} : cplx{c.get<double>(), 0.0};
  }
  if (j.contains("qexp")) s.qexp = rat_from(j.at("qexp"));
  if (j.contains("pexp")) s.pexp = rat_from(j.at("pexp"));
  return s;
}

json sexp(const SExp& e) { return json{{"plain", rat(e.plain)}, {"s", rat(e.s_coeff)}}; }

SExp sexp_from(const json& j) {
  SExp e;
  if (j.contains("plain")) e.plain = rat_from(j.at("plain"));
  if (j.contains("s")) e.s_coeff = rat_from(j.at("s"));
  return e;
}

}  // namespace

std::string to_json_string(const StructuredW& w) {
  json j;
  j["n"] = w.n;
  j["l"] = w.l;
  j["constant"] = scalar(w.constant);
  j["power_t"] = json::array();
  for (const auto& e : w.power_t) j["power_t"].push_back(sexp(e));
  j["power_z"] = json::array();
  for (const auto& e : w.power_z) j["power_z"].push_back(sexp(e));
  j["atoms"] = json::array();
  for (const auto& a : w.atoms)
    j["atoms"].push_back(json{{"constant", scalar(a.constant)},
                              {"t_exp", a.t_exp},
                              {"z_exp", a.z_exp},
                              {"position", a.numerator ? "numerator" : "denominator"}});
  return j.dump(2);
}

StructuredW from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("StructuredW JSON: ") + e.what());
  }
  try {
    StructuredW w;
    w.n = j.at("n").get<int>();
    w.l = j.at("l").get<int>();
    if (w.n < 1 || w.l < 0 || w.l > w.n) throw DomainError("StructuredW JSON: bad (n, l)");
    if (j.contains("constant")) w.constant = scalar_from(j.at("constant"));
    w.power_t.assign(w.l, SExp{});
    w.power_z.assign(w.n, SExp{});
    if (j.contains("power_t")) {
      if (j.at("power_t").size() != static_cast<std::size_t>(w.l)) throw DomainError("power_t length must be l");
      for (int a = 0; a < w.l; ++a) w.power_t[a] = sexp_from(j.at("power_t")[a]);
    }
    if (j.contains("power_z")) {
      if (j.at("power_z").size() != static_cast<std::size_t>(w.n)) throw DomainError("power_z length must be n");
      for (int i = 0; i < w.n; ++i) w.power_z[i] = sexp_from(j.at("power_z")[i]);
    }
    for (const auto& ja : j.value("atoms", json::array())) {
      ThetaAtom a;
      a.constant = scalar_from(ja.at("constant"));
      a.t_exp = ja.at("t_exp").get<std::vector<int>>();
      a.z_exp = ja.at("z_exp").get<std::vector<int>>();
      if (a.t_exp.size() != static_cast<std::size_t>(w.l) || a.z_exp.size() != static_cast<std::size_t>(w.n))
        throw DomainError("atom exponent vectors must have lengths l and n");
      const std::string pos = ja.value("position", "numerator");
      if (pos != "numerator" && pos != "denominator") throw DomainError("atom position must be numerator or denominator");
      a.numerator = pos == "numerator";
      w.atoms.push_back(a);
    }
    return w;
  } catch (const json::exception& e) {
    throw DomainError(std::string("StructuredW JSON: ") + e.what());
  }
}

}  // namespace qkz
