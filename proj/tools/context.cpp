#include "context.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <discrete_remez/error.hpp>

namespace cli {

using nlohmann::json;
namespace dr = discrete_remez;

json make_manifest(const std::string& command, const json& parameters, const GlobalOptions& g) {
  const auto now = std::chrono::system_clock::now();
  return {{"command", command},
          {"parameters", parameters},
          {"seed", g.seed},
          {"threads", g.threads},
          {"version", DISCRETE_REMEZ_VERSION},
          {"timestamp", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(now)))}};
}

Context::Context(std::string command, json parameters, const GlobalOptions& g)
    : g_(g), manifest_(make_manifest(command, parameters, g)) {
  if (!g_.constants_table.empty()) {
    std::ifstream in(g_.constants_table, std::ios::binary);
    dr::require(in.good(), dr::ErrorCode::kParseError, "cannot open " + g_.constants_table);
    std::ostringstream buf;
    buf << in.rdbuf();
    table_ = dr::ConstantsTable::parse_json(buf.str());
  }
}

dr::VitushkinModel Context::model(int n, int d) const {
  if (table_) return table_->model(n, d);
  return dr::VitushkinModel::builtin(n, d);
}

void Context::write(const std::string& text) const {
  if (g_.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g_.out, std::ios::binary);
  dr::require(out.good(), dr::ErrorCode::kParseError, "cannot write " + g_.out);
  out << text;
}

void Context::emit_json(json result) const {
  json doc = {{"manifest", manifest_}, {"result", std::move(result)}};
  write(doc.dump(1) + "\n");
}

void Context::emit_csv(const std::string& csv) const {
  write("# manifest " + manifest_.dump() + "\n" + csv);
}

json parsed(const std::string& text) { return json::parse(text); }

}  // namespace cli
