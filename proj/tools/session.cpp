#include "session.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tamex/error.hpp"

namespace tamex::cli {

void SessionConfig::validate() const {
  if (n < 2) throw PreconditionError("dimension must be at least 2");
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  if (mesh <= 0) throw PreconditionError("mesh step must be positive");
  if (degree_cap < 1) throw PreconditionError("degree cap must be positive");
}

SessionConfig load_config(const std::string& path, SessionConfig cfg) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what(), 1, e.byte);
  }
  if (!j.is_object()) throw PreconditionError("config must be a JSON object");
  if (j.contains("field")) {
    const auto& f = j["field"];
    cfg.field = f.is_number() ? Field::prime(f.get<std::uint32_t>()) : Field::parse(f.get<std::string>());
  }
  if (j.contains("n")) cfg.n = j["n"].get<std::size_t>();
  if (j.contains("degree_cap")) cfg.degree_cap = j["degree_cap"].get<unsigned>();
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("mesh")) cfg.mesh = parse_rational(j["mesh"].is_string() ? j["mesh"].get<std::string>() : j["mesh"].dump());
  if (j.contains("depth")) cfg.depth = j["depth"].get<unsigned>();
  if (j.contains("radius")) cfg.radius = j["radius"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  cfg.validate();
  return cfg;
}

std::string default_config_path() {
  const char* p = std::getenv(kConfigEnv);
  return p ? std::string(p) : std::string();
}

std::string read_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string text = arg;
  for (auto& c : text)
    if (c == ';') c = '\n';
  return text + "\n";
}

std::vector<TameWord> read_words(const std::string& arg, const SessionConfig& cfg) {
  return parse_word_list(read_source(arg), cfg.n, cfg.field, cfg.degree_cap);
}

TameWord read_word(const std::string& arg, const SessionConfig& cfg) {
  return parse_word(read_source(arg), cfg.n, cfg.field, cfg.degree_cap);
}

TameWord read_word_or_identity(const std::string& arg, const SessionConfig& cfg) {
  if (arg.empty()) return TameWord::identity(cfg.n, cfg.field, cfg.degree_cap);
  return read_word(arg, cfg);
}

}  // namespace tamex::cli
