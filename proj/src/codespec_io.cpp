#include "rctrs/codespec_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace rctrs {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t to_u64(std::string_view s, std::size_t line, const std::string& key) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    parse_error(line, "key '" + key + "': expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

struct Entry {
  std::string value;
  std::size_t line;
};

}  // namespace

CodeSpec codespec_read(std::istream& is) {
  static const char* const kKeys[] = {"field", "family", "n", "k", "h", "t", "extended",
                                      "alphas", "b", "c", "lambda", "eta", "v"};
  std::map<std::string, Entry> entries;
  std::string raw;
  std::size_t lineno = 0;
  bool seen_any = false;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string key(line.substr(0, sp));
    const std::string value(sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp)));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      parse_error(lineno, "unknown key '" + key + "'");
    if (!seen_any && key != "field") parse_error(lineno, "the first entry must be 'field'");
    seen_any = true;
    if (entries.count(key)) parse_error(lineno, "duplicate key '" + key + "'");
    if (value.empty()) parse_error(lineno, "key '" + key + "' has no value");
    entries[key] = {value, lineno};
  }
  if (!seen_any) parse_error(lineno + 1, "missing 'field'");
  for (const char* req : {"family", "n", "k", "alphas"})
    if (!entries.count(req)) parse_error(lineno + 1, std::string("missing key '") + req + "'");

  CodeSpec s;
  try {
    s.field = Field::parse(entries["field"].value);
  } catch (const Error& e) {
    parse_error(entries["field"].line, std::string("key 'field': ") + e.what());
  }
  const Field f = s.field;

  auto element = [&](const std::string& key, std::string_view text, std::size_t line) {
    const std::uint64_t idx = to_u64(text, line, key);
    if (idx >= f.order()) parse_error(line, "key '" + key + "': index " + std::to_string(idx) + " outside the field");
    return f.from_index(idx);
  };
  auto element_list = [&](const std::string& key) {
    std::vector<Element> out;
    const Entry& e = entries[key];
    std::string_view rest = e.value;
    while (true) {
      const auto comma = rest.find(',');
      out.push_back(element(key, rest.substr(0, comma), e.line));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return out;
  };
  auto scalar = [&](const std::string& key, std::uint64_t dflt) {
    auto it = entries.find(key);
    return it == entries.end() ? dflt : to_u64(it->second.value, it->second.line, key);
  };
  auto elem_or_zero = [&](const std::string& key) {
    auto it = entries.find(key);
    return it == entries.end() ? f.zero() : element(key, it->second.value, it->second.line);
  };

  try {
    s.family = family_from_string(entries["family"].value);
  } catch (const Error&) {
    parse_error(entries["family"].line, "key 'family': unknown family '" + entries["family"].value + "'");
  }
  s.n = scalar("n", 0);
  s.k = scalar("k", 0);
  s.h = scalar("h", 0);
  s.t = scalar("t", 1);
  const std::uint64_t ext = scalar("extended", 0);
  if (ext > 1) parse_error(entries["extended"].line, "key 'extended': expected 0 or 1");
  s.extended = ext == 1;
  s.alphas = element_list("alphas");
  s.b = elem_or_zero("b");
  s.c = elem_or_zero("c");
  s.lambda = elem_or_zero("lambda");
  s.eta = elem_or_zero("eta");
  if (entries.count("v")) s.v = element_list("v");

  try {
    validate(s);
  } catch (const Error& e) {
    throw Error(Errc::ValidationError, e.what());
  }
  return s;
}

CodeSpec codespec_read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return codespec_read(in);
}

void codespec_write(std::ostream& os, const CodeSpec& s) {
  validate(s);
  auto list = [&](const std::vector<Element>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string((xs[i] + s.field.zero()).index());
    }
    return out;
  };
  auto idx = [&](const Element& x) { return (x + s.field.zero()).index(); };
  os << "field " << s.field.descriptor() << '\n'
     << "family " << to_string(s.family) << '\n'
     << "n " << s.n << '\n'
     << "k " << s.k << '\n'
     << "h " << s.h << '\n'
     << "t " << s.t << '\n'
     << "extended " << (s.extended ? 1 : 0) << '\n'
     << "alphas " << list(s.alphas) << '\n'
     << "b " << idx(s.b) << '\n'
     << "c " << idx(s.c) << '\n'
     << "lambda " << idx(s.lambda) << '\n'
     << "eta " << idx(s.eta) << '\n';
  if (!s.v.empty()) os << "v " << list(s.v) << '\n';
}

void codespec_write_file(const std::string& path, const CodeSpec& spec) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write '" + path + "'");
  codespec_write(out, spec);
}

}  // namespace rctrs
