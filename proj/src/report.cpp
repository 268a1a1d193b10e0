#include "matclose/report.hpp"

namespace matclose {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Undecided:
      return "undecided-at-bound";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "?";
}

std::string format_field(const std::string& key, const std::string& value) {
  bool quote = value.empty();
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '"' || c == '=') quote = true;
  }
  if (!quote) return key + "=" + value;
  std::string out = key + "=\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string format_record(const Record& r) {
  std::string out = format_field("check", r.check);
  out += " " + format_field("ring", r.ring);
  if (r.n != 0) out += " " + format_field("n", std::to_string(r.n));
  if (r.level >= 0) out += " " + format_field("level", std::to_string(r.level));
  out += " " + format_field("verdict", to_string(r.verdict));
  out += " " + format_field("witness", r.witness);
  return out;
}

}  // namespace matclose
