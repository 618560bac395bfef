#include "simpair/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "simpair/error.hpp"

namespace simpair {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_at(std::string_view text, std::size_t byte, const std::string& msg) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(msg, line, column);
}

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports the 1-based byte count of the last character read.
    fail_at(text, e.byte == 0 ? 0 : e.byte - 1, "malformed JSON");
  }
}

[[noreturn]] void shape_error(std::string_view text, const std::string& msg) {
  fail_at(text, 0, msg);
}

std::size_t as_index(std::string_view text, const ordered_json& v, const char* what) {
  if (!v.is_number_unsigned()) shape_error(text, std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

BlockList as_blocks(std::string_view text, const ordered_json& v, const char* key) {
  if (!v.is_array()) shape_error(text, std::string("\"") + key + "\" must be a list of blocks");
  BlockList blocks;
  for (const auto& b : v) {
    if (!b.is_array()) shape_error(text, std::string("\"") + key + "\" block must be a list");
    Block block;
    for (const auto& x : b) block.push_back(as_index(text, x, "element"));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

void require_keys(std::string_view text, const ordered_json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) shape_error(text, "expected a JSON object");
  for (auto k : keys)
    if (!j.contains(k)) shape_error(text, std::string("missing key \"") + k + "\"");
  if (j.size() != keys.size()) shape_error(text, "unexpected extra keys");
}

ordered_json blocks_json(const BlockList& blocks) {
  auto out = ordered_json::array();
  for (const auto& b : blocks) out.push_back(b);
  return out;
}

}  // namespace

std::string serialize_pair(const FinPair& p) {
  ordered_json j;
  j["n"] = p.size();
  j["E"] = blocks_json(p.E().blocks());
  j["F"] = blocks_json(p.F().blocks());
  return j.dump();
}

FinPair parse_pair(std::string_view text) {
  auto j = parse_json(text);
  require_keys(text, j, {"n", "E", "F"});
  auto n = as_index(text, j["n"], "\"n\"");
  return validate_pair(n, as_blocks(text, j["E"], "E"), as_blocks(text, j["F"], "F"));
}

std::string serialize_witness(const Witness& w) {
  ordered_json j;
  j["mode"] = to_string(w.mode);
  j["map"] = w.map;
  return j.dump();
}

Witness parse_witness(std::string_view text) {
  auto j = parse_json(text);
  require_keys(text, j, {"mode", "map"});
  if (!j["mode"].is_string()) shape_error(text, "\"mode\" must be a string");
  if (!j["map"].is_array()) shape_error(text, "\"map\" must be a list");
  Witness w;
  try {
    w.mode = witness_mode_from_string(j["mode"].get<std::string>());
  } catch (const Error& e) {
    shape_error(text, e.what());
  }
  for (const auto& v : j["map"]) w.map.push_back(as_index(text, v, "map entry"));
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace simpair
