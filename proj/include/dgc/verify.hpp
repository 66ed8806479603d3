#pragma once

#include "dgc/homology.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dgc {

// One verification suite per acceptance criterion.
struct VerifyResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
    double seconds = 0;
};

using ProgressFn = std::function<void(const std::string&)>;

std::vector<std::string> verify_suite_names();

// Runs a named suite at its pinned bounds. Unknown names throw.
VerifyResult verify_suite(const std::string& name, const HomologyOptions& opts,
                          Cache* cache = nullptr, ProgressFn progress = {});

} // namespace dgc
