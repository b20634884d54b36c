#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "busecoarse/metric_space.hpp"

namespace busecoarse {

/// Sampling can refute or support a property, never prove it.
enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v) noexcept;

/// Quantified outcome of an inequality check lhs <= rhs.
struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Inconclusive;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs, worst over the sample
    std::size_t samples = 0;
    std::vector<Point> witness;  // offending configuration when verdict == Fail

    bool passed() const noexcept { return verdict == Verdict::Pass; }
};

}  // namespace busecoarse
