#pragma once

#include <vector>

#include "harmonic/io.hpp"
#include "harmonic/model.hpp"

namespace fixtures {

inline harmonic::TaskSet gap() {
    return harmonic::parse_taskset_file(HARMONIC_DATA_DIR "/gap.csv");
}

inline harmonic::TaskSet hartstone() {
    return harmonic::parse_taskset_file(HARMONIC_DATA_DIR "/hartstone.csv");
}

// Table II columns in sorted (non-decreasing original period) order.
inline const std::vector<long long> gap_tsu_periods{
    25, 25, 25, 50, 50, 50, 50, 50, 100,
    200, 200, 200, 200, 200, 200, 800, 800};

inline const std::vector<long long> gap_mpe_periods{
    20, 20, 40, 40, 40, 40, 80, 80, 80,
    160, 160, 160, 160, 160, 160, 640, 640};

inline const std::vector<long long> gap_foe_periods{
    8, 8, 40, 40, 40, 40, 40, 40, 40,
    200, 200, 200, 200, 200, 200, 1000, 1000};

} // namespace fixtures
