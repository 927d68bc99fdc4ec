#pragma once

#include <string_view>
#include <vector>

namespace cutcalc {

struct BundledExample {
    const char* filename;
    std::string_view source;
};

/// Scenario sources shipped with the CLI; the test corpus parses the same
/// constants, so the shipped files cannot drift from the tested ones.
const std::vector<BundledExample>& bundled_examples();

std::string_view flag_u3_source();
std::string_view blowup_cp2_source();

}  // namespace cutcalc
