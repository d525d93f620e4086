#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "mrg/model.hpp"
#include "mrg/parse.hpp"
#include "mrg/place.hpp"

namespace testing_support {

inline std::filesystem::path spec_path(const std::string& name) {
  return std::filesystem::path(MRG_DATA_DIR) / "specs" / name;
}

inline mrg::MultiRecSpec load(const std::string& name) { return mrg::load_spec_file(spec_path(name)); }

inline mrg::MultiRecSpec spec_from(const std::string& text) { return mrg::load_spec(nlohmann::json::parse(text)); }

inline nlohmann::json bound_fixtures() {
  std::ifstream in(std::filesystem::path(MRG_FIXTURE_DIR) / "bound_fixtures.json");
  return nlohmann::json::parse(in);
}

inline mrg::RatFunc F(const std::string& s) { return mrg::parse_expr(s); }
inline mrg::Place V(const std::string& s) {
  return s == "inf" ? mrg::Place::infinite() : mrg::Place::finite(mrg::parse_expr(s).num().monic());
}

}  // namespace testing_support
