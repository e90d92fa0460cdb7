#pragma once

#include <hyperladder/family.hpp>
#include <hyperladder/json_io.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace hyperladder::cli {

// Everything a subcommand needs. Rationals stay strings until family() parses them.
struct RunConfig {
    std::string family = "jacobi";
    std::string alpha = "0";
    std::string beta = "0";
    std::string mu;
    std::string eta;
    bool monic = false;
    int l = 2;
    int m = 0;
    int lmax = 15;
    int mmax = -1;
    double tol = 0.0;
    int grid = 0;
    int sign = 0;
    int count = 3;
    std::string z = "0,0";
    std::string out;
    std::string format;

    FamilySpec make() const;
    std::complex<double> z_value() const;
    /// Ranges nonempty, tolerances positive, sign in {-1, 0, 1}. Throws DomainError.
    void check() const;

    Json to_json() const;
    /// Sets the fields present in `j`, skipping those named in `locked`.
    void merge(const Json& j, const std::vector<std::string>& locked);
};

/// FNV-1a over the canonical JSON of the command name and config.
std::uint64_t config_hash(const std::string& command, const RunConfig& config);
std::string hex(std::uint64_t value);

}  // namespace hyperladder::cli
