#pragma once

#include "symquot/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symquot {

enum class DecVerdict { PASS, VIOLATION, SKIPPED };
const char* to_string(DecVerdict v);

/// Per-character classification row.
struct QuotientReport {
    unsigned chi_index = 0;
    unsigned degree = 0;
    long lambda_exponent = 0;
    bool symmetric = false;
    unsigned rank_K = 0;
    unsigned rank_k = 0;
    std::optional<bool> matrix_algebra;   // empty: no monomial realization
    bool central_type = false;
    unsigned height = 0;
    unsigned block = 0;
    std::optional<long> trace_exponent;   // empty: skipped
    std::optional<bool> gram_unimodular;  // empty: skipped
    bool divisible = false;
    bool nakayama = false;                // ann(kernel ideal) principal-central
    std::vector<std::pair<unsigned, long>> lattice_pivots;  // witness data
    DecVerdict verdict = DecVerdict::PASS;
};

struct GroupClassification {
    std::string spec;
    unsigned order = 0;
    unsigned exponent = 0;
    unsigned classes = 0;
    std::uint64_t p = 2;
    unsigned conductor = 1;
    unsigned ramification = 1;
    unsigned residue_degree = 1;
    bool semisimple = false;  // p does not divide |G|
    std::vector<QuotientReport> rows;
    unsigned violations = 0;
    unsigned skipped = 0;
};

/// Classify every irreducible character of the group at p.  jobs > 1 runs
/// character rows concurrently (deterministic output order either way).
GroupClassification classify_group(const GroupPtr& G, std::uint64_t p, unsigned conductor = 0,
                                   unsigned jobs = 1);
GroupClassification classify_group(const std::string& spec, std::uint64_t p,
                                   unsigned conductor = 0, unsigned jobs = 1);

/// The built-in corpus: every family instance of order <= 64, wreath:3, and
/// the two ingestion-path table fixtures.
std::vector<GroupPtr> corpus_groups();

struct CorpusEntry {
    std::string spec;
    std::uint64_t p = 0;
    unsigned order = 0;
    unsigned rows = 0;
    unsigned symmetric = 0;
    unsigned violations = 0;
    unsigned skipped = 0;
    bool consistency_ok = true;  // purity == nakayama, gram == purity, r=0 == matrix
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;
    unsigned total_violations = 0;
    unsigned total_skipped = 0;
    bool consistency_ok = true;
};

/// Sweep the corpus (optionally filtered by a substring/glob on the spec)
/// through the classifier at every prime dividing the order.
CorpusReport run_corpus(const std::string& filter = "", unsigned jobs = 1);

/// Per-proposition verification verdicts.
enum class Verdict { PASS, FAIL, SKIPPED };
const char* to_string(Verdict v);

struct VerifyResult {
    std::string id;
    Verdict verdict = Verdict::PASS;
    std::vector<std::pair<std::string, std::string>> facts;  // ordered witnesses
};

struct VerifyOptions {
    std::string group_spec;
    std::optional<std::uint64_t> p;
    std::optional<unsigned> n;
    std::string kind;  // sec3basis: dihedral | quaternion | quasidihedral | (all)
    unsigned jobs = 1;
};

/// One subcommand per in-scope item: thm1.1, prop1.6, prop1.7, prop1.8,
/// cor1.9, lemma3.1, sec3basis, prop4.2, example6.1.
VerifyResult run_verify(const std::string& id, const VerifyOptions& opt);

}  // namespace symquot
