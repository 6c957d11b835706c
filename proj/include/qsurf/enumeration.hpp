#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsurf/channels.hpp"
#include "qsurf/codes.hpp"
#include "qsurf/decoders.hpp"

namespace qsurf {

// Error class of weight j = nx + nz + ny: which Pauli letters appear, not where.
struct ErrorClass {
    int nx = 0;
    int nz = 0;
    int ny = 0;
    int weight() const { return nx + nz + ny; }
    std::string label() const;  // "XZY" style, X's first, then Z's, then Y's
};

// The C(j+2, 2) classes of weight j, X-major order (XX, XZ, XY, ZZ, ZY, YY, ...).
std::vector<ErrorClass> classes_of_weight(int j);

// C(n,nx) C(n-nx,nz) C(n-nx-nz,ny): distinct placements within the class.
uint64_t class_combinations(int n, const ErrorClass& cls);

struct ClassCount {
    ErrorClass cls;
    uint64_t total = 0;
    uint64_t failures = 0;
    double fraction() const { return total ? static_cast<double>(failures) / total : 0.0; }
};

struct BetaRow {
    int weight = 0;
    std::vector<ClassCount> classes;
    uint64_t total = 0;
    uint64_t failures = 0;
    double one_minus_beta = 0;    // combination-weighted aggregate over the classes
    double one_minus_beta_z = 0;  // fraction of the pure-Z class
};

struct BetaTable {
    int dx = 0, dz = 0;
    bool xzzx = false;
    int n = 0;
    std::string code_id;
    std::string decoder;
    std::vector<BetaRow> rows;
    const BetaRow* row(int weight) const;
};

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(uint64_t required_, uint64_t budget_)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(required_) +
                             " decodes needed, budget " + std::to_string(budget_)),
          required(required_),
          budget(budget_) {}
    uint64_t required;
    uint64_t budget;
};

inline constexpr uint64_t kDefaultBudget = 10'000'000;

// Exhaustively decodes every placement of the class letters on distinct qubits.
// channel is only consulted by the ml decoder (which needs n-k <= 16 here).
// Throws BudgetExceeded when class_combinations exceeds the budget.
ClassCount enumerate_class(const SurfaceCode& code, Decoder dec, const Channel* ch,
                           const ErrorClass& cls, uint64_t budget = kDefaultBudget,
                           int workers = 1);

// All classes of one weight, aggregated per Eq-style combination weighting.
BetaRow beta_row(const SurfaceCode& code, Decoder dec, const Channel* ch, int weight,
                 uint64_t budget = kDefaultBudget, int workers = 1);

// Pure-Z class only (C(n, weight) placements).
ClassCount beta_z(const SurfaceCode& code, Decoder dec, const Channel* ch, int weight,
                  uint64_t budget = kDefaultBudget, int workers = 1);

BetaTable enumerate_beta(const SurfaceCode& code, Decoder dec, const Channel* ch, int max_weight,
                         uint64_t budget = kDefaultBudget, int workers = 1);

std::string beta_table_to_json(const BetaTable& table);
BetaTable beta_table_from_json(const std::string& text);

}  // namespace qsurf
