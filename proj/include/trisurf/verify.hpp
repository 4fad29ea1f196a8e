#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trisurf/catalog.hpp"
#include "trisurf/generator.hpp"

namespace trisurf {

enum class VerifyLevel { Fast, Full };

/// Catalog names whose canonical code is in `codes`, in catalog order, and
/// how many codes matched no entry.
struct CodeMatch {
  std::vector<std::string> names;
  int unmatched = 0;
};
CodeMatch match_catalog(const ClassSet& codes, const Catalog& catalog);

/// Every check behind the classification, in a fixed order: catalog, Table 1,
/// PS1.1 completion, crosscap rederivation, exhaustive counts and the
/// closure identity. `on_check` sees each check as soon as it is decided.
Report verify_classification(const Catalog& catalog, VerifyLevel level, const GeneratorOptions& opts = {},
                    const std::function<void(const Check&)>& on_check = {});

}  // namespace trisurf
