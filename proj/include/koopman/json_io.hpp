#ifndef KOOPMAN_JSON_IO_HPP
#define KOOPMAN_JSON_IO_HPP

#include <json.hpp>

#include "koopman/eigenfunction.hpp"
#include "koopman/errors.hpp"

namespace koopman {

inline nlohmann::json quadext_to_json(const QuadExt& v) {
  return {{"rat", v.rat().str()}, {"rad", v.rad().str()}, {"radicand", v.radicand().str()}};
}

inline QuadExt quadext_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rat") || !j.contains("rad") || !j.contains("radicand"))
    raise(ErrorKind::Parse, "expected {rat, rad, radicand} object");
  return QuadExt(Rational::parse(j["rat"].get<std::string>()),
                 Rational::parse(j["rad"].get<std::string>()),
                 Rational::parse(j["radicand"].get<std::string>()));
}

inline nlohmann::json eigenpair_to_json(const ExactEigenpair& p) {
  return {{"lambda", quadext_to_json(p.lambda)},
          {"c", {quadext_to_json(p.ef.c0), quadext_to_json(p.ef.c1), quadext_to_json(p.ef.c2)}},
          {"d", {quadext_to_json(p.ef.d0), quadext_to_json(p.ef.d1), quadext_to_json(p.ef.d2)}}};
}

inline ExactEigenpair eigenpair_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("c") || !j.contains("d") ||
      !j["c"].is_array() || j["c"].size() != 3 || !j["d"].is_array() || j["d"].size() != 3)
    raise(ErrorKind::Parse, "eigenpair JSON needs lambda and 3-element c, d arrays");
  ExactEigenpair p;
  p.lambda = quadext_from_json(j["lambda"]);
  p.ef.c0 = quadext_from_json(j["c"][0]);
  p.ef.c1 = quadext_from_json(j["c"][1]);
  p.ef.c2 = quadext_from_json(j["c"][2]);
  p.ef.d0 = quadext_from_json(j["d"][0]);
  p.ef.d1 = quadext_from_json(j["d"][1]);
  p.ef.d2 = quadext_from_json(j["d"][2]);
  return p;
}

} // namespace koopman

#endif
