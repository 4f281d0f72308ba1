#include "ybwb/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace ybwb {

namespace {

using nlohmann::ordered_json;

ordered_json coeff_json(const Scalar& c) { return to_string(c); }

ordered_json coeff_json(const TPoly& p) {
  ordered_json a = ordered_json::array();
  for (int d = 0; d <= p.degree(); ++d) a.push_back(to_string(p.coeff(d)));
  return a;
}

template <class R>
ordered_json tensor_json_impl(const Tensor2<R>& t, const char* ring) {
  ordered_json j;
  j["n"] = t.n();
  j["ring"] = ring;
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, c] : t.terms()) {
    ordered_json term;
    term["idx"] = {idx[0], idx[1], idx[2], idx[3]};
    term["coeff"] = coeff_json(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string report_status(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Exact: return "exact";
    case IdentityStatus::UpToSign: return "up-to-sign";
    default: return "failed";
  }
}

}  // namespace

std::string status_string(IdentityStatus s) { return report_status(s); }

std::string tensor_to_json(const QTensor2& t) { return tensor_json_impl(t, "Q").dump(); }
std::string tensor_to_json(const PTensor2& t) { return tensor_json_impl(t, "Q[t]").dump(); }

AnyTensor2 tensor_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  int n = j.at("n").get<int>();
  std::string ring = j.at("ring").get<std::string>();
  if (ring == "Q") {
    QTensor2 t(n);
    for (const auto& term : j.at("terms")) {
      const auto& idx = term.at("idx");
      if (idx.size() != 4) throw std::invalid_argument("tensor_from_json: idx must have 4 entries");
      t.add_term({idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), idx[3].get<int>()},
                 parse_rational(term.at("coeff").get<std::string>()));
    }
    return t;
  }
  if (ring == "Q[t]") {
    PTensor2 t(n);
    for (const auto& term : j.at("terms")) {
      const auto& idx = term.at("idx");
      if (idx.size() != 4) throw std::invalid_argument("tensor_from_json: idx must have 4 entries");
      TPoly p;
      int d = 0;
      for (const auto& c : term.at("coeff"))
        p += TPoly::t(d++, parse_rational(c.get<std::string>()));
      t.add_term({idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), idx[3].get<int>()}, p);
    }
    return t;
  }
  throw std::invalid_argument("tensor_from_json: unknown ring '" + ring + "'");
}

std::string tensor3_to_json(const QTensor3& t) {
  ordered_json j;
  j["n"] = t.n();
  j["ring"] = "Q";
  ordered_json terms = ordered_json::array();
  for (const auto& [idx, c] : t.terms()) {
    ordered_json term;
    term["idx"] = {idx[0], idx[1], idx[2], idx[3], idx[4], idx[5]};
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

QTensor3 tensor3_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("ring").get<std::string>() != "Q")
    throw std::invalid_argument("tensor3_from_json: rational tensors only");
  QTensor3 t(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    const auto& idx = term.at("idx");
    if (idx.size() != 6) throw std::invalid_argument("tensor3_from_json: idx must have 6 entries");
    t.add_term({idx[0].get<int>(), idx[1].get<int>(), idx[2].get<int>(), idx[3].get<int>(),
                idx[4].get<int>(), idx[5].get<int>()},
               parse_rational(term.at("coeff").get<std::string>()));
  }
  return t;
}

namespace {

std::string unit_name(int i, int j, int n) {
  if (n <= 9) return "e" + std::to_string(i) + std::to_string(j);
  return "e(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::pair<int, int> parse_unit(const std::string& s) {
  if (s.size() >= 2 && s[0] == 'e' && s[1] == '(') {
    auto comma = s.find(',');
    auto close = s.find(')');
    if (comma == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("parse_unit: malformed '" + s + "'");
    return {std::stoi(s.substr(2, comma - 2)), std::stoi(s.substr(comma + 1, close - comma - 1))};
  }
  if (s.size() == 3 && s[0] == 'e') return {s[1] - '0', s[2] - '0'};
  throw std::invalid_argument("parse_unit: malformed '" + s + "'");
}

}  // namespace

std::string tensor_to_pretty(const QTensor2& t, int n_hint) {
  if (!is_skew(t)) throw std::invalid_argument("tensor_to_pretty: tensor is not skew");
  int n = n_hint > 0 ? n_hint : t.n();
  if (t.is_zero()) return "0";
  std::ostringstream os;
  std::set<std::array<int, 4>> seen;
  bool first = true;
  for (const auto& [idx, c] : t.terms()) {
    if (seen.count(idx)) continue;
    seen.insert(idx);
    seen.insert({idx[2], idx[3], idx[0], idx[1]});
    Scalar w = c * 2;  // wedge coefficient of the half-difference convention
    if (first) {
      if (sgn(w) < 0) os << "- ";
      first = false;
    } else {
      os << (sgn(w) < 0 ? " - " : " + ");
    }
    Scalar a = abs(w);
    if (a != 1) os << to_string(a) << " ";
    os << unit_name(idx[0], idx[1], n) << "^" << unit_name(idx[2], idx[3], n);
  }
  return os.str();
}

QTensor2 tensor_from_pretty(const std::string& text, int n) {
  QTensor2 t(n);
  if (text == "0") return t;
  std::istringstream is(text);
  std::string tok;
  int sign = 1;
  Scalar coeff(1);
  bool have_coeff = false;
  auto flush_pair = [&](const std::string& pair_tok) {
    auto caret = pair_tok.find('^');
    if (caret == std::string::npos)
      throw std::invalid_argument("tensor_from_pretty: expected wedge pair, got '" + pair_tok + "'");
    auto [i, j] = parse_unit(pair_tok.substr(0, caret));
    auto [k, l] = parse_unit(pair_tok.substr(caret + 1));
    Scalar w = coeff * sign;
    QMatrix a = QMatrix::unit(n, i, j), b = QMatrix::unit(n, k, l);
    t += w * wedge(a, b);
    sign = 1;
    coeff = 1;
    have_coeff = false;
  };
  while (is >> tok) {
    if (tok == "+") { sign = 1; continue; }
    if (tok == "-") { sign = -1; continue; }
    if (tok.find('^') != std::string::npos) { flush_pair(tok); continue; }
    if (have_coeff) throw std::invalid_argument("tensor_from_pretty: two coefficients in a row");
    coeff = parse_rational(tok);
    have_coeff = true;
  }
  if (have_coeff) throw std::invalid_argument("tensor_from_pretty: dangling coefficient");
  return t;
}

std::string triple_to_json(const Triple& t) {
  ordered_json j;
  j["n"] = t.n;
  j["pi1"] = t.pi1;
  j["pi2"] = t.pi2;
  ordered_json map = ordered_json::array();
  for (const auto& [src, dst] : t.T) map.push_back({src, dst});
  j["T"] = std::move(map);
  return j.dump();
}

Triple triple_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Triple t;
  t.n = j.at("n").get<int>();
  for (const auto& v : j.at("pi1")) t.pi1.insert(v.get<int>());
  for (const auto& v : j.at("pi2")) t.pi2.insert(v.get<int>());
  for (const auto& pair : j.at("T")) {
    if (pair.size() != 2) throw std::invalid_argument("triple_from_json: T entries must be pairs");
    t.T[pair[0].get<int>()] = pair[1].get<int>();
  }
  return t;
}

namespace {

template <class R>
std::string bigmatrix_json_impl(const BigMatrix<R>& m, bool poly) {
  ordered_json j;
  j["n2"] = m.dim();
  j["ring"] = poly ? "Q[t]" : "Q";
  ordered_json entries = ordered_json::array();
  for (const auto& [rc, v] : m.entries()) {
    ordered_json e;
    e["r"] = rc.first;
    e["c"] = rc.second;
    e["coeff"] = coeff_json(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

}  // namespace

std::string bigmatrix_to_json(const PBigMatrix& m) { return bigmatrix_json_impl(m, true); }
std::string bigmatrix_to_json(const QBigMatrix& m) { return bigmatrix_json_impl(m, false); }

std::variant<QBigMatrix, PBigMatrix> bigmatrix_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  int n2 = j.at("n2").get<int>();
  std::string ring = j.value("ring", "Q[t]");
  if (ring == "Q") {
    QBigMatrix m(n2);
    for (const auto& e : j.at("entries"))
      m.add(e.at("r").get<int>(), e.at("c").get<int>(),
            parse_rational(e.at("coeff").get<std::string>()));
    return m;
  }
  PBigMatrix m(n2);
  for (const auto& e : j.at("entries")) {
    TPoly p;
    int d = 0;
    for (const auto& c : e.at("coeff")) p += TPoly::t(d++, parse_rational(c.get<std::string>()));
    m.add(e.at("r").get<int>(), e.at("c").get<int>(), p);
  }
  return m;
}

std::string report_to_json(const Report& r) {
  ordered_json j;
  j["construction"] = r.construction;
  j["n"] = r.n;
  if (r.i) j["i"] = *r.i;
  if (r.seed) j["seed"] = *r.seed;
  ordered_json ids = ordered_json::array();
  for (const auto& id : r.identities) {
    ordered_json o;
    o["name"] = id.name;
    o["status"] = report_status(id.status);
    if (id.sign) o["sign"] = to_string(*id.sign);
    ids.push_back(std::move(o));
  }
  j["identities"] = std::move(ids);
  if (r.carrier) {
    j["carrier"] = {{"dim", r.carrier->dim}, {"matches_parabolic", r.carrier->matches_parabolic}};
  }
  return j.dump();
}

}  // namespace ybwb
