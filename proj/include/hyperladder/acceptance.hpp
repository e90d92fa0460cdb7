#pragma once

#include "hyperladder/family.hpp"

#include <string>
#include <vector>

namespace hyperladder {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// One line per sub-check, "ok" or "FAIL" first.
    std::vector<std::string> lines;
    double seconds = 0.0;
};

constexpr int kCriterionCount = 8;

/// Families of the exact suite: Jacobi on {0,1/2,3/2}^2, hypergeometric at (0,0) and
/// (1/2,1/2), Laguerre at {0,1,5/2} and Hermite.
std::vector<FamilySpec> acceptance_families();

/// Runs one criterion (1..8). `threads` caps the worker pool for the sweeps; 0 means
/// hardware concurrency.
CriterionResult run_criterion(int id, unsigned threads = 0);

/// Trigonometric Poschl-Teller closed forms for alpha = mu - 1/2, beta = eta - 1/2 under s = cos x.
double poschl_teller_potential(double mu, double eta, double x);
double poschl_teller_superpotential(double mu, double eta, double x);

}  // namespace hyperladder
