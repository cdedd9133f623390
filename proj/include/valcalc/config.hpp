#ifndef VALCALC_CONFIG_HPP
#define VALCALC_CONFIG_HPP

#include <cstdint>
#include <string>

namespace valcalc {

// Resource caps and run parameters. Set once at startup (the CLI loads a
// config file and flags into this); treated as immutable afterwards, so
// concurrent readers are safe.
struct Config {
    int max_dim = 6;                // hulls, volumes, monomial integration
    int max_lattice_dim = 4;        // full face lattice enumeration
    int max_cf_dim = 3;             // constructible functions and chains
    int facet_hyperplane_cap = 64;  // arrangement size in common refinement
    int weight_degree_cap = 4;      // polynomial weight densities
    int monomial_degree_cap = 4;    // |alpha| in monomial integration
    int max_bodies = 4;             // bodies per Minkowski polynomial fit
    std::uint64_t seed = 0xA15E5CE1ULL;
    std::string testset_version = "ts-v1";
    bool verify_fits = true;             // out-of-sample check after each fit
    bool debug_flip_antipodal = false;   // test hook: drop the fiber sign twist
};

inline Config& config() {
    static Config c;
    return c;
}

} // namespace valcalc

#endif
