#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ontoforge::registry {

// old label -> optional replacement label.
using DeprecationTable = std::map<std::string, std::optional<std::string>>;

// TSV `old<TAB>replacement` with an allowed-empty replacement column;
// blank lines and # comments are skipped. A duplicated old label is an
// error: two rows retiring one label cannot both be right.
DeprecationTable load_deprecations(std::string_view bytes);

}  // namespace ontoforge::registry
