#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hausdorff/operator_spec.hpp"
#include "hausdorff/result_document.hpp"
#include "hausdorff/spec_document.hpp"

namespace hausdorff {

// Bundled reference operators.
SpecDocument remark_circle_document();                  // f(x) + f(2x), d = 1
SpecDocument cell_growth_document(double alpha = 2.0,
                                  Complex c0 = {1.0, 0.0},
                                  Complex c1 = {1.0, 0.0}); // d = 2: I, diag(alpha, 1)
SpecDocument ross_document();                           // sum_{k=0..2} u(2^{-k} x), d = 1
SpecDocument two_term_document();                       // dilations 2, 3
SpecDocument three_term_document();                     // dilations 2, 3, 5
SpecDocument prime_family_document();                   // geometric-prime generator

struct CaseStudyCheck {
    std::string description;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
};

struct CaseStudyResult {
    std::string name;
    bool passed = false;
    std::vector<CaseStudyCheck> checks;
    ResultDocument document;
};

const std::vector<std::string>& case_study_names();

// Runs one named case end to end and asserts its documented expectations;
// `samples_override` shrinks the sampling budgets (tests). Throws
// UnknownCaseError for names outside the catalog.
CaseStudyResult run_case_study(const std::string& name, std::uint64_t seed = 0,
                               std::optional<std::int64_t> samples_override = std::nullopt);

} // namespace hausdorff
