#ifndef GRAPHCOHOM_VERIFY_HPP
#define GRAPHCOHOM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphcohom {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // offending literal on failure, measured values otherwise
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string id, bool pass, std::string witness = {});
    void append(const VerificationReport& other);
    std::string to_json() const;
    std::string to_text() const;
};

VerificationReport verify_signs(std::uint64_t seed);
VerificationReport verify_coboundary();
VerificationReport verify_generators();
VerificationReport verify_oracle(std::uint64_t seed);
// Ranks against the predicted dimensions for n ≤ 5, plus the rank certificate.
VerificationReport verify_cohomology();

// "signs", "coboundary", "generators", "oracle" or "all" (which also runs the
// cohomology checks). Throws std::invalid_argument on an unknown name.
VerificationReport verify_suite(const std::string& name, std::uint64_t seed);

}  // namespace graphcohom

#endif
