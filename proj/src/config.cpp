#include "lvp/config.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "lvp/errors.hpp"

namespace lvp {

namespace {

constexpr std::array<const char*, 6> kCoefficientNames = {"a", "b", "c",
                                                          "d", "e", "f"};

struct Cursor {
  int line = 0;
  int column = 1;
};

std::string_view trim(std::string_view s, int* leading = nullptr) {
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  std::size_t end = s.size();
  while (end > start && (s[end - 1] == ' ' || s[end - 1] == '\t' ||
                         s[end - 1] == '\r')) {
    --end;
  }
  if (leading) *leading = static_cast<int>(start);
  return s.substr(start, end - start);
}

double parseNumber(std::string_view token, int line, int column) {
  const std::string buffer(token);
  if (buffer.empty()) throw ParseError("expected a number", line, column);
  char* end = nullptr;
  const double value = std::strtod(buffer.c_str(), &end);
  if (end != buffer.c_str() + buffer.size()) {
    throw ParseError("invalid number '" + buffer + "'", line, column);
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number '" + buffer + "'", line, column);
  }
  return value;
}

struct CoefficientDraft {
  std::optional<std::string> kind;
  std::optional<double> value;
  std::optional<double> c0;
  std::vector<Harmonic> harmonics;
  int line = 0;
};

PeriodicCoefficient build(const std::string& name, const CoefficientDraft& d) {
  if (!d.kind) {
    throw ParseError("section [" + name + "] is missing 'kind'", d.line, 1);
  }
  if (*d.kind == "const") {
    if (!d.value) {
      throw ParseError("section [" + name + "] needs 'value'", d.line, 1);
    }
    if (d.c0 || !d.harmonics.empty()) {
      throw ParseError("section [" + name + "]: const takes only 'value'",
                       d.line, 1);
    }
    return PeriodicCoefficient::constant(*d.value);
  }
  if (!d.c0) throw ParseError("section [" + name + "] needs 'c0'", d.line, 1);
  if (d.value) {
    throw ParseError("section [" + name + "]: trig takes 'c0', not 'value'",
                     d.line, 1);
  }
  return PeriodicCoefficient::trigonometric(*d.c0, d.harmonics);
}

}  // namespace

SystemSpec parseConfig(std::string_view text) {
  std::optional<double> period;
  bool sawSystem = false;
  std::map<std::string, CoefficientDraft> drafts;
  std::string section;

  int lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, next == std::string_view::npos ? std::string_view::npos
                                            : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    ++lineNo;

    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    int lead = 0;
    const std::string_view line = trim(raw, &lead);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("unterminated section header", lineNo, lead + 1);
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section == "system") {
        if (sawSystem) throw ParseError("duplicate [system]", lineNo, lead + 1);
        sawSystem = true;
        continue;
      }
      bool known = false;
      for (const char* n : kCoefficientNames) known = known || section == n;
      if (!known) {
        throw ParseError("unknown section [" + section + "]", lineNo, lead + 1);
      }
      if (drafts.count(section)) {
        throw ParseError("duplicate section [" + section + "]", lineNo,
                         lead + 1);
      }
      drafts[section].line = lineNo;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", lineNo, lead + 1);
    }
    const std::string key(trim(line.substr(0, eq)));
    int valueLead = 0;
    const std::string_view value = trim(line.substr(eq + 1), &valueLead);
    const int valueColumn = lead + static_cast<int>(eq) + 2 + valueLead;

    if (section.empty()) {
      throw ParseError("key outside of any section", lineNo, lead + 1);
    }
    if (section == "system") {
      if (key != "T") {
        throw ParseError("unknown key '" + key + "' in [system]", lineNo,
                         lead + 1);
      }
      period = parseNumber(value, lineNo, valueColumn);
      continue;
    }

    CoefficientDraft& draft = drafts[section];
    if (key == "kind") {
      if (value != "const" && value != "trig") {
        throw ParseError("kind must be 'const' or 'trig'", lineNo,
                         valueColumn);
      }
      draft.kind = std::string(value);
    } else if (key == "value") {
      draft.value = parseNumber(value, lineNo, valueColumn);
    } else if (key == "c0") {
      draft.c0 = parseNumber(value, lineNo, valueColumn);
    } else if (key == "harmonic") {
      std::vector<std::pair<std::string_view, int>> parts;
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = value.find(',', start);
        const std::string_view piece = value.substr(
            start, comma == std::string_view::npos ? std::string_view::npos
                                                   : comma - start);
        int pieceLead = 0;
        const std::string_view trimmed = trim(piece, &pieceLead);
        parts.emplace_back(trimmed,
                           valueColumn + static_cast<int>(start) + pieceLead);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (parts.size() != 3) {
        throw ParseError("harmonic needs 'k, cos, sin'", lineNo, valueColumn);
      }
      const double k = parseNumber(parts[0].first, lineNo, parts[0].second);
      if (k < 1 || k != std::floor(k) || k > 1e6) {
        throw ParseError("harmonic index must be a positive integer", lineNo,
                         parts[0].second);
      }
      Harmonic h;
      h.k = static_cast<int>(k);
      h.cosCoeff = parseNumber(parts[1].first, lineNo, parts[1].second);
      h.sinCoeff = parseNumber(parts[2].first, lineNo, parts[2].second);
      for (const Harmonic& existing : draft.harmonics) {
        if (existing.k == h.k) {
          throw ParseError("repeated harmonic k = " + std::to_string(h.k),
                           lineNo, parts[0].second);
        }
      }
      draft.harmonics.push_back(h);
    } else {
      throw ParseError("unknown key '" + key + "'", lineNo, lead + 1);
    }
  }

  if (!sawSystem || !period) {
    throw ParseError("missing [system] section with 'T'", lineNo, 1);
  }
  SystemSpec spec;
  spec.T = *period;
  PeriodicCoefficient* slots[] = {&spec.a, &spec.b, &spec.c,
                                  &spec.d, &spec.e, &spec.f};
  for (std::size_t i = 0; i < kCoefficientNames.size(); ++i) {
    const std::string name = kCoefficientNames[i];
    const auto it = drafts.find(name);
    if (it == drafts.end()) {
      throw ParseError("missing section [" + name + "]", lineNo, 1);
    }
    *slots[i] = build(name, it->second);
  }
  spec.validate();
  return spec;
}

SystemSpec loadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseConfig(buffer.str());
}

std::string formatConfig(const SystemSpec& spec) {
  std::ostringstream out;
  out << "[system]\nT = " << formatReal(spec.T) << "\n";
  const PeriodicCoefficient* slots[] = {&spec.a, &spec.b, &spec.c,
                                        &spec.d, &spec.e, &spec.f};
  for (std::size_t i = 0; i < kCoefficientNames.size(); ++i) {
    const PeriodicCoefficient& c = *slots[i];
    out << "\n[" << kCoefficientNames[i] << "]\n";
    if (c.isConstant()) {
      out << "kind = const\nvalue = " << formatReal(c.offset()) << "\n";
      continue;
    }
    out << "kind = trig\nc0 = " << formatReal(c.offset()) << "\n";
    for (const Harmonic& h : c.harmonics()) {
      out << "harmonic = " << h.k << ", " << formatReal(h.cosCoeff) << ", "
          << formatReal(h.sinCoeff) << "\n";
    }
  }
  return out.str();
}

}  // namespace lvp
