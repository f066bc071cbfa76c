#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace idemdim {

// Outcome of one verification claim.  Failures always carry a
// machine-checkable counterexample line.
struct VerificationReport {
    std::string claim;
    bool passed = true;
    std::vector<std::string> evidence;
    std::vector<std::string> counterexamples;
    double runtime_ms = 0.0;

    void note(std::string line) { evidence.push_back(std::move(line)); }
    void fail(std::string counterexample) {
        passed = false;
        counterexamples.push_back(std::move(counterexample));
    }
    void merge(const VerificationReport& sub) {
        for (const auto& e : sub.evidence) evidence.push_back(sub.claim + ": " + e);
        for (const auto& c : sub.counterexamples) {
            passed = false;
            counterexamples.push_back(sub.claim + ": " + c);
        }
    }

    std::string to_text() const {
        std::string s = (passed ? "PASS " : "FAIL ") + claim + "\n";
        for (const auto& e : evidence) s += "  " + e + "\n";
        for (const auto& c : counterexamples) s += "  counterexample: " + c + "\n";
        return s;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["claim"] = claim;
        j["status"] = passed ? "pass" : "fail";
        j["evidence"] = evidence;
        j["counterexamples"] = counterexamples;
        j["runtime_ms"] = runtime_ms;
        return j;
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace idemdim
