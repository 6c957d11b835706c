#pragma once

#include <cstdint>
#include <string>

namespace qcli {

struct ReproduceConfig {
    std::string target;   // table1 | fig2 | fig3 | fig4 | fig5 | all
    std::string out_dir;
    uint64_t trials = 100000;
    uint64_t seed = 20240001;
    uint64_t budget = 10000000;
    int workers = 1;
};

void run_reproduce(const ReproduceConfig& cfg);

}  // namespace qcli
