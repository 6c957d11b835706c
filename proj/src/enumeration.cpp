#include "qsurf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "json.hpp"
#include "qsurf/analysis.hpp"

namespace qsurf {

namespace {

// visit all k-subsets of items (as index vectors into items), lexicographic
template <typename F>
void for_each_combination(const std::vector<int>& items, int k, F&& visit) {
    int n = static_cast<int>(items.size());
    if (k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> chosen(k);
    while (true) {
        for (int i = 0; i < k; ++i) chosen[i] = items[idx[i]];
        visit(chosen);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct Judge {
    const SurfaceCode& code;
    Decoder dec;
    const Channel* ch;
    std::optional<CosetTable> table;

    Judge(const SurfaceCode& c, Decoder d, const Channel* channel, int workers)
        : code(c), dec(d), ch(channel) {
        if (dec == Decoder::ml) {
            if (ch == nullptr) throw std::invalid_argument("ml enumeration needs a channel");
            if (code.generators.size() > 16)
                throw std::invalid_argument("ml enumeration needs the full coset table (n <= 17)");
            table.emplace(code, *ch, workers);
        }
    }

    bool fails(const Pauli& e) const {
        if (dec == Decoder::ml) return !table->judge_ml(e);
        Pauli corr = decode_mwpm(code, syndrome(code, e));
        return logical_class(code, multiply(e, corr)) != LogicalClass::I;
    }
};

}  // namespace

std::string ErrorClass::label() const {
    return std::string(nx, 'X') + std::string(nz, 'Z') + std::string(ny, 'Y');
}

std::vector<ErrorClass> classes_of_weight(int j) {
    std::vector<ErrorClass> out;
    for (int nx = j; nx >= 0; --nx)
        for (int nz = j - nx; nz >= 0; --nz) out.push_back({nx, nz, j - nx - nz});
    return out;
}

uint64_t class_combinations(int n, const ErrorClass& cls) {
    return binomial(n, cls.nx) * binomial(n - cls.nx, cls.nz) *
           binomial(n - cls.nx - cls.nz, cls.ny);
}

ClassCount enumerate_class(const SurfaceCode& code, Decoder dec, const Channel* ch,
                           const ErrorClass& cls, uint64_t budget, int workers) {
    ClassCount out;
    out.cls = cls;
    out.total = class_combinations(code.n, cls);
    if (out.total > budget) throw BudgetExceeded(out.total, budget);

    Judge judge(code, dec, ch, workers);

    std::vector<int> all(code.n);
    for (int i = 0; i < code.n; ++i) all[i] = i;

    // parallel split: outer X-combinations are strided across workers; the
    // failure counts merge by plain summation, so results are worker-count
    // independent
    workers = std::max(1, workers);
    std::vector<uint64_t> fails(workers, 0);
    auto run = [&](int wid) {
        uint64_t outer = 0;
        for_each_combination(all, cls.nx, [&](const std::vector<int>& xs) {
            if (outer++ % static_cast<uint64_t>(workers) != static_cast<uint64_t>(wid)) return;
            Mask xmask;
            for (int q : xs) xmask.set(q);
            std::vector<int> rem1;
            rem1.reserve(code.n - cls.nx);
            for (int q : all)
                if (!xmask.test(q)) rem1.push_back(q);
            for_each_combination(rem1, cls.nz, [&](const std::vector<int>& zs) {
                Mask zmask;
                for (int q : zs) zmask.set(q);
                std::vector<int> rem2;
                rem2.reserve(rem1.size() - cls.nz);
                for (int q : rem1)
                    if (!zmask.test(q)) rem2.push_back(q);
                for_each_combination(rem2, cls.ny, [&](const std::vector<int>& ys) {
                    Pauli e = identity(code.n);
                    e.x = xmask;
                    e.z = zmask;
                    for (int q : ys) {
                        e.x.set(q);
                        e.z.set(q);
                    }
                    if (judge.fails(e)) ++fails[wid];
                });
            });
        });
    };
    if (workers == 1 || cls.nx == 0) {
        // an empty outer group leaves nothing to stride over; run serial
        run(0);
        for (int w = 1; w < workers; ++w) fails[w] = 0;
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (int w = 0; w < workers; ++w) out.failures += fails[w];
    return out;
}

BetaRow beta_row(const SurfaceCode& code, Decoder dec, const Channel* ch, int weight,
                 uint64_t budget, int workers) {
    BetaRow row;
    row.weight = weight;
    for (const ErrorClass& cls : classes_of_weight(weight)) {
        ClassCount c = enumerate_class(code, dec, ch, cls, budget, workers);
        row.total += c.total;
        row.failures += c.failures;
        if (cls.nx == 0 && cls.ny == 0) row.one_minus_beta_z = c.fraction();
        row.classes.push_back(std::move(c));
    }
    row.one_minus_beta = row.total ? static_cast<double>(row.failures) / row.total : 0.0;
    return row;
}

ClassCount beta_z(const SurfaceCode& code, Decoder dec, const Channel* ch, int weight,
                  uint64_t budget, int workers) {
    return enumerate_class(code, dec, ch, ErrorClass{0, weight, 0}, budget, workers);
}

BetaTable enumerate_beta(const SurfaceCode& code, Decoder dec, const Channel* ch, int max_weight,
                         uint64_t budget, int workers) {
    BetaTable table;
    table.dx = code.dx;
    table.dz = code.dz;
    table.xzzx = code.variant == Variant::xzzx;
    table.n = code.n;
    table.code_id = code.id();
    table.decoder = decoder_name(dec);
    for (int j = 1; j <= max_weight; ++j)
        table.rows.push_back(beta_row(code, dec, ch, j, budget, workers));
    return table;
}

const BetaRow* BetaTable::row(int weight) const {
    for (const BetaRow& r : rows)
        if (r.weight == weight) return &r;
    return nullptr;
}

std::string beta_table_to_json(const BetaTable& table) {
    nlohmann::json j;
    j["code"] = {{"dx", table.dx}, {"dz", table.dz}, {"xzzx", table.xzzx},
                 {"n", table.n},   {"id", table.code_id}};
    j["decoder"] = table.decoder;
    j["rows"] = nlohmann::json::array();
    for (const BetaRow& row : table.rows) {
        nlohmann::json classes = nlohmann::json::array();
        for (const ClassCount& c : row.classes) {
            classes.push_back({{"label", c.cls.label()},
                               {"nx", c.cls.nx},
                               {"nz", c.cls.nz},
                               {"ny", c.cls.ny},
                               {"total", c.total},
                               {"failures", c.failures},
                               {"fraction", c.fraction()}});
        }
        j["rows"].push_back({{"weight", row.weight},
                             {"classes", std::move(classes)},
                             {"total", row.total},
                             {"failures", row.failures},
                             {"one_minus_beta", row.one_minus_beta},
                             {"one_minus_beta_z", row.one_minus_beta_z}});
    }
    return j.dump(2);
}

BetaTable beta_table_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BetaTable table;
    table.dx = j.at("code").at("dx");
    table.dz = j.at("code").at("dz");
    table.xzzx = j.at("code").at("xzzx");
    table.n = j.at("code").at("n");
    table.code_id = j.at("code").at("id");
    table.decoder = j.at("decoder");
    for (const auto& rj : j.at("rows")) {
        BetaRow row;
        row.weight = rj.at("weight");
        row.total = rj.at("total");
        row.failures = rj.at("failures");
        row.one_minus_beta = rj.at("one_minus_beta");
        row.one_minus_beta_z = rj.at("one_minus_beta_z");
        for (const auto& cj : rj.at("classes")) {
            ClassCount c;
            c.cls = ErrorClass{cj.at("nx"), cj.at("nz"), cj.at("ny")};
            c.total = cj.at("total");
            c.failures = cj.at("failures");
            row.classes.push_back(c);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace qsurf
