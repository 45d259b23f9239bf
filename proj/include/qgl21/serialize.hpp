#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "qgl21/verify.hpp"

namespace qgl21 {

using nlohmann::json;

inline json signature_to_json(const Signature& s) {
  return json::array({to_string(s.m1), to_string(s.m2), to_string(s.m3)});
}

inline Signature signature_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("signature must be a 3-element array");
  return Signature{parse_rational(j[0].get<std::string>()),
                   parse_rational(j[1].get<std::string>()),
                   parse_rational(j[2].get<std::string>())};
}

inline json report_to_json(const VerificationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"id", e.id},
                       {"residual", e.residual},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass},
                       {"gating", e.gating}});
  return {{"entries", entries},
          {"classification", r.classification},
          {"dimension", r.dimension},
          {"wall_time_ms", r.wall_time_ms},
          {"pass", r.passed()}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  for (const auto& e : j.at("entries"))
    r.entries.push_back({e.at("id").get<std::string>(), e.at("residual").get<double>(),
                         e.at("tolerance").get<double>(), e.at("pass").get<bool>(),
                         e.at("gating").get<bool>()});
  r.classification = j.at("classification").get<std::string>();
  r.dimension = j.at("dimension").get<std::size_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

/// Serializes a built representation. Matrix entries are decimal strings with
/// enough digits to reparse bit-exactly at the stored precision; weight
/// labels are "n" or "n/d" strings.
template <class S>
json to_document(const ReprMatrices<S>& rep, const VerificationReport* report = nullptr) {
  json basis = json::array();
  for (const auto& p : rep.basis.patterns)
    basis.push_back({{"k", p.k},
                     {"local", signature_to_json(p.local)},
                     {"m11", to_string(p.m11)},
                     {"m31", to_string(p.m31)}});

  json gens = json::object();
  const std::size_t n = rep.dimension();
  for (auto name : ReprMatrices<S>::generator_names) {
    const Matrix<S>& m = rep.generator(name);
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(Field<S>::to_decimal(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    gens[std::string(name)] = std::move(rows);
  }

  Classification c = classify(rep.basis.global);
  return {{"signature", signature_to_json(rep.basis.global)},
          {"p", Field<S>::to_decimal(rep.params.p)},
          {"q", Field<S>::to_decimal(rep.params.q)},
          {"precision", rep.params.precision},
          {"constants",
           {{"a1", Field<S>::to_decimal(rep.a[0])},
            {"a2", Field<S>::to_decimal(rep.a[1])},
            {"a3", Field<S>::to_decimal(rep.a[2])}}},
          {"kind", std::string(rep_kind_name(rep.kind))},
          {"dimension", n},
          {"basis", std::move(basis)},
          {"generators", std::move(gens)},
          {"classification",
           {{"kind", std::string(typicality_name(c.kind))},
            {"factors", json::array({to_string(c.factor1), to_string(c.factor2)})}}},
          {"verification", report ? report_to_json(*report) : json(nullptr)}};
}

inline unsigned document_precision(const json& doc) {
  return doc.at("precision").get<unsigned>();
}

template <class S>
ReprMatrices<S> from_document(const json& doc) {
  ReprMatrices<S> rep;
  unsigned precision = document_precision(doc);
  Field<S> f(precision);

  Signature global = signature_from_json(doc.at("signature"));
  if (!global.dominant()) throw std::invalid_argument("document signature is not dominant");

  rep.params = Params<S>{f.from_decimal(doc.at("p").get<std::string>()),
                         f.from_decimal(doc.at("q").get<std::string>()), precision,
                         default_tolerance(precision)};
  rep.params.validate();
  const json& cs = doc.at("constants");
  rep.a = {f.from_decimal(cs.at("a1").get<std::string>()),
           f.from_decimal(cs.at("a2").get<std::string>()),
           f.from_decimal(cs.at("a3").get<std::string>())};

  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "full")
    rep.kind = RepKind::Full;
  else if (kind == "quotient-class1")
    rep.kind = RepKind::QuotientClass1;
  else if (kind == "quotient-class2")
    rep.kind = RepKind::QuotientClass2;
  else
    throw std::invalid_argument("unknown representation kind: " + kind);

  // Rebuild the basis from the pattern records and check it is exactly the
  // enumeration this library produces for the stored kind.
  ModuleBasis expected = module_basis(global);
  if (rep.kind != RepKind::Full)
    expected = detail::quotient_basis(expected, rep.kind == RepKind::QuotientClass1
                                                    ? TypicalityKind::Class1
                                                    : TypicalityKind::Class2);
  const json& basis = doc.at("basis");
  if (!basis.is_array() || basis.size() != expected.dimension())
    throw std::invalid_argument("basis record count does not match the enumeration");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const json& r = basis[i];
    const GZPattern& e = expected.patterns[i];
    if (r.at("k").get<int>() != e.k ||
        !(signature_from_json(r.at("local")) == e.local) ||
        !(parse_rational(r.at("m11").get<std::string>()) == e.m11) ||
        !(parse_rational(r.at("m31").get<std::string>()) == e.m31))
      throw std::invalid_argument("basis record " + std::to_string(i) +
                                  " does not match the enumeration");
  }
  rep.basis = expected;

  const std::size_t n = expected.dimension();
  if (doc.at("dimension").get<std::size_t>() != n)
    throw std::invalid_argument("dimension field does not match the basis");
  const json& gens = doc.at("generators");
  for (auto name : ReprMatrices<S>::generator_names) {
    const json& rows = gens.at(std::string(name));
    if (!rows.is_array() || rows.size() != n)
      throw std::invalid_argument("generator " + std::string(name) + " has wrong row count");
    Matrix<S> m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        throw std::invalid_argument("generator " + std::string(name) + " has wrong column count");
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = f.from_decimal(rows[i][j].get<std::string>());
    }
    rep.generator(name) = std::move(m);
  }
  return rep;
}

inline json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

inline void store_document(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << doc.dump(1) << "\n";
}

}  // namespace qgl21
