#include "lieloop/bialgebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lieloop {

namespace {

using nlohmann::json;

std::string shape_of(const json& j) {
  std::string s;
  const json* cur = &j;
  while (cur->is_array()) {
    s += (s.empty() ? "" : "x") + std::to_string(cur->size());
    if (cur->empty()) break;
    cur = &(*cur)[0];
  }
  return s.empty() ? "scalar" : s;
}

bool is_cube(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) return false;
  for (const auto& a : j) {
    if (!a.is_array() || static_cast<int>(a.size()) != n) return false;
    for (const auto& b : a)
      if (!b.is_array() || static_cast<int>(b.size()) != n) return false;
  }
  return true;
}

Tensor3 read_cube(const json& j, int n, const std::string& name, const std::string& source) {
  Tensor3 t(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const json& v = j[i][k][l];
        if (!v.is_number()) {
          std::ostringstream os;
          os << source << ": " << name << "[" << i << "][" << k << "][" << l << "] is not a number";
          throw FormatError(os.str());
        }
        t(i, k, l) = v.get<double>();
      }
  return t;
}

json write_cube(const Tensor3& t) {
  json out = json::array();
  for (int i = 0; i < t.dim(0); ++i) {
    json a = json::array();
    for (int k = 0; k < t.dim(1); ++k) {
      json b = json::array();
      for (int l = 0; l < t.dim(2); ++l) b.push_back(t(i, k, l));
      a.push_back(b);
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

BialgebraSpec parse_bialgebra(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << source << ": JSON parse error at byte " << e.byte << ": " << e.what();
    throw FormatError(os.str());
  }
  if (!j.is_object()) throw FormatError(source + ": top level must be an object");
  for (const char* key : {"dim", "mu", "gamma", "psi"})
    if (!j.contains(key)) throw FormatError(source + ": missing field \"" + key + "\"");
  if (!j["dim"].is_number_integer()) throw FormatError(source + ": \"dim\" must be an integer");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > GradedMultiVector::kMaxDim) {
    std::ostringstream os;
    os << source << ": dim " << n << " outside [1, " << GradedMultiVector::kMaxDim << "]";
    throw FormatError(os.str());
  }
  const bool ok = is_cube(j["mu"], n) && is_cube(j["gamma"], n) && is_cube(j["psi"], n);
  if (!ok) {
    std::ostringstream os;
    os << source << ": tensor shapes disagree with dim " << n << ": mu " << shape_of(j["mu"]) << ", gamma "
       << shape_of(j["gamma"]) << ", psi " << shape_of(j["psi"]) << " (expected " << n << "x" << n << "x" << n << ")";
    throw FormatError(os.str());
  }
  try {
    BialgebraSpec s;
    s.dim = n;
    s.mu = AntisymBilinearTensor::from_tensor(read_cube(j["mu"], n, "mu", source), "mu");
    s.gamma = Cobracket::from_tensor(read_cube(j["gamma"], n, "gamma", source), "gamma");
    s.psi = Trivector::from_tensor(read_cube(j["psi"], n, "psi", source), "psi");
    return s;
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw FormatError(source + ": " + e.what());
  }
}

std::string bialgebra_to_json(const BialgebraSpec& spec) {
  spec.validate_shape();
  nlohmann::ordered_json j;
  j["dim"] = spec.dim;
  j["mu"] = write_cube(spec.mu.tensor());
  j["gamma"] = write_cube(spec.gamma.tensor());
  j["psi"] = write_cube(spec.psi.tensor());
  return j.dump(2) + "\n";
}

BialgebraSpec load_bialgebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bialgebra(ss.str(), path);
}

void save_bialgebra(const BialgebraSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput(path + ": cannot open file for writing");
  out << bialgebra_to_json(spec);
  if (!out) throw InvalidInput(path + ": write failed");
}

}  // namespace lieloop
