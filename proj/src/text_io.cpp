#include "pancake/text_io.hpp"

#include <cctype>
#include <sstream>

namespace pancake {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

bool parse_int(const std::string& t, int& out) {
  if (t.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoi(t, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == t.size();
}

std::optional<AnyStack> parse_shorthand(const std::string& t) {
  SpecialKind kind;
  size_t off;
  if (t.rfind("-I", 0) == 0) {
    kind = SpecialKind::NegIdentity;
    off = 2;
  } else if (t.rfind("I", 0) == 0) {
    kind = SpecialKind::Identity;
    off = 1;
  } else if (t.rfind("J", 0) == 0) {
    kind = SpecialKind::J;
    off = 1;
  } else if (t.rfind("Y", 0) == 0) {
    kind = SpecialKind::Y;
    off = 1;
  } else {
    return std::nullopt;
  }
  int n;
  if (!parse_int(t.substr(off), n) || n < 1)
    throw ParseError("bad size in stack shorthand", 1);
  return AnyStack{make_special(kind, n)};
}

}  // namespace

AnyStack parse_stack(const std::string& text) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty stack", 1);
  if (tokens.size() == 1 && !tokens[0].empty() &&
      !std::isdigit(static_cast<unsigned char>(tokens[0][0])) &&
      tokens[0][0] != '+') {
    if (auto s = parse_shorthand(tokens[0])) return *s;
  }

  bool mixed = false, signed_seen = false;
  for (const auto& t : tokens) {
    if (!t.empty() && t.back() == 'u') mixed = true;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) signed_seen = true;
  }

  if (mixed) {
    MixedStack s;
    for (size_t i = 0; i < tokens.size(); ++i) {
      std::string t = tokens[i];
      MixedEntry e;
      if (t.back() == 'u') {
        t.pop_back();
        int v;
        if (!parse_int(t, v) || v < 1)
          throw ParseError("bad unburnt token", static_cast<int>(i + 1));
        e = {v, Orientation::Unburnt};
      } else {
        int v;
        if (!parse_int(t, v) || v == 0)
          throw ParseError("bad burnt token", static_cast<int>(i + 1));
        e = {std::abs(v), v > 0 ? Orientation::Down : Orientation::Up};
      }
      s.entries.push_back(e);
    }
    try {
      validate(s);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), static_cast<int>(tokens.size()));
    }
    return s;
  }

  std::vector<int> values;
  for (size_t i = 0; i < tokens.size(); ++i) {
    int v;
    if (!parse_int(tokens[i], v))
      throw ParseError("bad integer token", static_cast<int>(i + 1));
    if (v == 0) throw ParseError("zero entry", static_cast<int>(i + 1));
    if (v < 0) signed_seen = true;
    values.push_back(v);
  }
  if (signed_seen) {
    BurntStack s{values};
    try {
      validate(s);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), static_cast<int>(tokens.size()));
    }
    return s;
  }
  UnburntStack s{values};
  try {
    validate(s);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what(), static_cast<int>(tokens.size()));
  }
  return s;
}

std::string format_stack(const BurntStack& s) {
  std::string out;
  for (int e : s.entries) {
    if (!out.empty()) out += ' ';
    if (e > 0) out += '+';
    out += std::to_string(e);
  }
  return out;
}

std::string format_stack(const UnburntStack& s) {
  std::string out;
  for (int e : s.entries) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::string format_stack(const MixedStack& s) {
  std::string out;
  for (const auto& e : s.entries) {
    if (!out.empty()) out += ' ';
    if (e.orient == Orientation::Unburnt) {
      out += std::to_string(e.label) + "u";
    } else {
      if (e.orient == Orientation::Down) out += '+';
      out += std::to_string(e.orient == Orientation::Down ? e.label
                                                          : -e.label);
    }
  }
  return out;
}

std::string format_stack(const AnyStack& s) {
  return std::visit([](const auto& v) { return format_stack(v); }, s);
}

}  // namespace pancake
