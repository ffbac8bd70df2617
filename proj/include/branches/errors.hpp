#pragma once

#include <stdexcept>
#include <string>

namespace branches {

// Base for everything thrown on purpose.  code() is a stable machine-readable
// tag (the CLI prints it); falsification() separates "bad input / resource
// limit" from "a verified computation contradicts an invariant that should
// hold for all valid inputs".  The latter is surfaced loudly and maps to a
// distinct process exit code.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }
    virtual bool falsification() const noexcept { return false; }

private:
    std::string code_;
};

class domain_error : public error {
public:
    using error::error;
};

class falsification_error : public error {
public:
    using error::error;
    bool falsification() const noexcept override { return true; }
};

struct composite_modulus : domain_error {
    explicit composite_modulus(const std::string& msg) : domain_error("CompositeModulus", msg) {}
};

struct context_mismatch : domain_error {
    explicit context_mismatch(const std::string& msg) : domain_error("ContextMismatch", msg) {}
};

struct division_by_zero : domain_error {
    explicit division_by_zero(const std::string& msg) : domain_error("DivisionByZero", msg) {}
};

struct bad_input : domain_error {
    explicit bad_input(const std::string& msg) : domain_error("BadInput", msg) {}
};

struct char1_violation : domain_error {
    explicit char1_violation(const std::string& msg) : domain_error("Char1Violation", msg) {}
};

// k is the first index where the growth condition e_{k-1} v_k < e_k v_{k+1} fails.
struct char2_violation : domain_error {
    char2_violation(const std::string& msg, int k_) : domain_error("Char2Violation", msg), k(k_) {}
    int k;
};

struct invalid_cap : domain_error {
    explicit invalid_cap(const std::string& msg) : domain_error("InvalidCap", msg) {}
};

// Thrown by derived quantities (dx, logdist, ...) when the underlying
// intersection number did not resolve below the precision cap.
struct precision_exhausted_error : domain_error {
    precision_exhausted_error(const std::string& msg, unsigned precision_)
        : domain_error("PrecisionExhausted", msg), precision(precision_) {}
    unsigned precision;
};

struct tower_verification_failed : domain_error {
    explicit tower_verification_failed(const std::string& msg)
        : domain_error("TowerVerificationFailed", msg) {}
};

struct invalid_perturbation : domain_error {
    explicit invalid_perturbation(const std::string& msg)
        : domain_error("InvalidPerturbation", msg) {}
};

struct not_attainable : domain_error {
    explicit not_attainable(const std::string& msg) : domain_error("NotAttainable", msg) {}
};

struct genericity_budget_exhausted : domain_error {
    explicit genericity_budget_exhausted(const std::string& msg)
        : domain_error("GenericityBudgetExhausted", msg) {}
};

struct invalid_r : domain_error {
    explicit invalid_r(const std::string& msg) : domain_error("InvalidR", msg) {}
};

struct hypothesis_violated : domain_error {
    explicit hypothesis_violated(const std::string& msg)
        : domain_error("HypothesisViolated", msg) {}
};

struct no_contact_index : falsification_error {
    explicit no_contact_index(const std::string& msg)
        : falsification_error("NoContactIndex", msg) {}
};

struct congruence_falsified : falsification_error {
    explicit congruence_falsified(const std::string& msg)
        : falsification_error("CongruenceFalsified", msg) {}
};

struct aux_sequence_invalid : falsification_error {
    explicit aux_sequence_invalid(const std::string& msg)
        : falsification_error("AuxSequenceInvalid", msg) {}
};

} // namespace branches
