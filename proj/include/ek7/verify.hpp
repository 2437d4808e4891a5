#ifndef EK7_VERIFY_HPP
#define EK7_VERIFY_HPP

#include <string>
#include <vector>

#include "ek7/dedekind.hpp"

namespace ek7 {

struct VerifyItem {
    std::string name;
    bool pass;
    std::string detail;  // nonempty only on failure
};

/// Runs the whole regression table (the published invariant values and
/// classification tables) plus the property suites at default bounds.
std::vector<VerifyItem> run_verification(const DedekindOptions& opts = {});

}  // namespace ek7

#endif
