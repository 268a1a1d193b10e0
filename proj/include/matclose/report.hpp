#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace matclose {

enum class Verdict { Holds, Fails, Undecided, Vacuous };

/// "holds", "fails", "undecided-at-bound", "vacuous".
std::string to_string(Verdict v);

/// One check outcome. `level` is -1 when the check is not tied to a level.
/// The witness re-checks against the property it documents: a violating
/// element for "fails", the decisive object (radical, inverse, chain entry...)
/// for "holds".
struct Record {
  std::string check;
  std::string ring;
  std::size_t n = 0;
  std::int64_t level = -1;
  Verdict verdict = Verdict::Holds;
  std::string witness;
  double elapsed_ms = 0.0;
};

using PropertyVerdict = Record;

inline Record make_record(std::string check, std::string ring, std::size_t n, std::int64_t level,
                          bool ok, std::string witness) {
  return {std::move(check), std::move(ring), n, level, ok ? Verdict::Holds : Verdict::Fails,
          std::move(witness), 0.0};
}

/// `key=value` with the value double-quoted (and `"`/`\` escaped) when it is
/// empty or contains whitespace, '"' or '='.
std::string format_field(const std::string& key, const std::string& value);

/// check=... ring=... n=... level=... verdict=... witness=...
/// (`n`/`level` omitted when zero/-1).
std::string format_record(const Record& r);

}  // namespace matclose
