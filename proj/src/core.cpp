#include "godel/core.hpp"

namespace godel {

const char* errc_name(errc c) {
  switch (c) {
    case errc::validation: return "validation";
    case errc::dimension: return "dimension";
    case errc::precondition: return "precondition";
    case errc::resource: return "resource";
  }
  return "unknown";
}

void fail_validation(const std::string& subject, const std::string& detail) {
  throw error(errc::validation, subject, detail);
}

void fail_dimension(const std::string& subject, const std::string& detail) {
  throw error(errc::dimension, subject, detail);
}

void fail_precondition(const std::string& subject, const std::string& detail) {
  throw error(errc::precondition, subject, detail);
}

void fail_resource(const std::string& cap_name, std::size_t cap, std::size_t reached) {
  throw error(errc::resource, cap_name,
              "cap " + std::to_string(cap) + " exceeded (reached " + std::to_string(reached) + ")");
}

void RunConfig::validate() const {
  if (chain_cap == 0 || hom_cap == 0 || upset_cap == 0 || algebra_cap == 0 || order_cap == 0 ||
      generator_cap < 0)
    fail_validation("caps must be positive");
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

}  // namespace godel
