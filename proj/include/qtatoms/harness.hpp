#pragma once
// Verification campaigns and result plumbing: enumerate (partition, cell,
// identity) tasks, run them with exact pass/fail residuals, aggregate into
// deterministic JSON reports, and persist expensive tables on disk.

#include "qtatoms/harmonics.hpp"
#include "qtatoms/pieri.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qtatoms {

enum class TaskKind {
    nfact,
    c_equals_h,
    pieri,
    conj_i3,
    four_term,
    crucial,
    flip,
    refined,
    sf_mst,
    bh_equiv,
    hook,
    gd,
    dimbound,
    lemma12,
};

std::string kind_name(TaskKind k);
TaskKind kind_from_name(const std::string& name);
std::vector<TaskKind> all_kinds();

struct Report {
    std::string task;
    std::string status;  // pass | fail | skipped
    nlohmann::json params;
    std::string residual;
    std::optional<nlohmann::json> counterexample;
    long millis = 0;

    nlohmann::json to_json() const;
};

struct CampaignOptions {
    int nmax = 5;
    int jobs = 1;
    unsigned seed = 12345;
    bool slow = false;       // opt-in larger brute-force tier
    int count = 200;         // random instances for the interpolation identity
    std::optional<Partition> only_mu;  // standalone re-run filters
    std::optional<Cell> only_cell;
};

std::vector<Report> run_campaign(TaskKind kind, const CampaignOptions& opt);

nlohmann::json reports_to_json(const std::vector<Report>& reports);
/// 0 = all pass, 1 = any fail, 3 = no fail but some skipped.
int reports_exit_code(const std::vector<Report>& reports);

// ------------------------------------------------------------------ cache ---

void set_cache_dir(const std::string& dir);  // empty disables
const std::string& cache_dir();

enum class CacheTable { htilde, transition, module_basis };

/// Store/load canonical text serializations.  load returns false when the
/// file is absent or malformed (the caller rebuilds; corrupt files warn on
/// stderr).  Degree keys the htilde/transition tables; module bases are keyed
/// by the diagram.
bool cache_store_htilde(int degree);
bool cache_load_htilde(int degree);
bool cache_store_transition(int degree);
bool cache_load_transition(int degree);
bool cache_store_module(const Partition& mu, const std::optional<Cell>& hole);
std::optional<BigradedBasis> cache_load_module(const Partition& mu,
                                               const std::optional<Cell>& hole);

/// htilde table with disk cache consulted first (when a cache dir is set).
void warm_htilde(int degree);

/// Serialization of the character table (used by the transition cache).
std::string character_table_serialize(int degree);
bool character_table_check(int degree, const std::string& text);

}  // namespace qtatoms
