#pragma once

#include <string>
#include <vector>

namespace arpt::cli {

struct FactCheck {
  std::string fact;
  bool ok;
  std::string detail;
};

/// Golden run on y^2 + xy + y = x^3 + 354x + 4684.  `facts` are the
/// quoted claims; `diagnostics` are supporting observations that do not
/// affect the verdict.
struct ExampleTranscript {
  std::vector<FactCheck> facts;
  std::vector<FactCheck> diagnostics;
  bool all_ok() const;
};

ExampleTranscript verify_example();

}  // namespace arpt::cli
