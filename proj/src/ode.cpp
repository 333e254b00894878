#include "koopman/ode.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "koopman/errors.hpp"

namespace koopman {

namespace {

// JSON numbers: integers convert exactly; floats go through the shortest
// round-trip decimal so that e.g. 0.125 becomes 1/8 and 0.1 becomes 1/10.
Rational rational_from_json(const nlohmann::json& v, const char* what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_float()) {
    const double d = v.get<double>();
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return Rational::parse(std::string(buf, res.ptr));
  }
  raise(ErrorKind::Parse, std::string("expected number or \"p/q\" string for ") + what);
}

} // namespace

std::string QuadraticODE::str() const {
  std::ostringstream os;
  os << "dx/dt = ";
  if (!a0.is_zero()) os << a0 << " + ";
  os << a1 << "*x + " << a2 << "*y + " << a3 << "*x^2 + " << a4 << "*xy + " << a5 << "*y^2";
  os << " ; dy/dt = ";
  if (!b0.is_zero()) os << b0 << " + ";
  os << b1 << "*x + " << b2 << "*y + " << b3 << "*x^2 + " << b4 << "*xy + " << b5 << "*y^2";
  return os.str();
}

QuadraticODE ode_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    raise(ErrorKind::Parse, "ODE JSON must be an object with \"a\" and \"b\" arrays");
  const auto& a = j["a"];
  const auto& b = j["b"];
  if (!a.is_array() || a.size() != 5 || !b.is_array() || b.size() != 5)
    raise(ErrorKind::Parse, "\"a\" and \"b\" must be arrays of 5 coefficients");

  QuadraticODE ode;
  ode.a1 = rational_from_json(a[0], "a1");
  ode.a2 = rational_from_json(a[1], "a2");
  ode.a3 = rational_from_json(a[2], "a3");
  ode.a4 = rational_from_json(a[3], "a4");
  ode.a5 = rational_from_json(a[4], "a5");
  ode.b1 = rational_from_json(b[0], "b1");
  ode.b2 = rational_from_json(b[1], "b2");
  ode.b3 = rational_from_json(b[2], "b3");
  ode.b4 = rational_from_json(b[3], "b4");
  ode.b5 = rational_from_json(b[4], "b5");
  if (j.contains("a0")) ode.a0 = rational_from_json(j["a0"], "a0");
  if (j.contains("b0")) ode.b0 = rational_from_json(j["b0"], "b0");
  return ode;
}

QuadraticODE ode_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::Parse, "cannot open ODE file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ode_from_json_text(buf.str());
}

std::string ode_to_json_text(const QuadraticODE& ode) {
  nlohmann::json j;
  j["a"] = {ode.a1.str(), ode.a2.str(), ode.a3.str(), ode.a4.str(), ode.a5.str()};
  j["b"] = {ode.b1.str(), ode.b2.str(), ode.b3.str(), ode.b4.str(), ode.b5.str()};
  if (!ode.a0.is_zero()) j["a0"] = ode.a0.str();
  if (!ode.b0.is_zero()) j["b0"] = ode.b0.str();
  return j.dump(2) + "\n";
}

void ode_to_json_file(const QuadraticODE& ode, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::Parse, "cannot write ODE file: " + path);
  out << ode_to_json_text(ode);
}

} // namespace koopman
