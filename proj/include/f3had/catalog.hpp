// Results catalogue (append-only JSON-lines store), the end-to-end
// analysis pipeline for one code, and reproduction reports diffing
// recomputed values against the bundled reference tables.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f3had/code.hpp"
#include "f3had/ortho.hpp"

namespace f3had {

struct CatalogRecord {
    std::string label, family, ra, rb;
    int n = 0, k = 0;
    bool self_dual = false;
    int d = 0;
    std::string extremality;
    uint64_t a9 = 0, a36 = 0;
    std::string enum_sha256;           // digest of the enumerator CSV
    SearchTuple tuple;
    std::vector<std::string> matrix_certs;   // sorted cert hex per class
    std::vector<uint64_t> aut_orders;        // parallel to matrix_certs
    std::string created;               // ISO timestamp; excluded from equality

    std::string to_json() const;       // single line
    static CatalogRecord from_json(const std::string& line);
    bool same_payload(const CatalogRecord& o) const;  // ignores `created`
};

class CatalogStore {
public:
    explicit CatalogStore(std::string path);
    void append(const CatalogRecord& rec);
    std::optional<CatalogRecord> find(const std::string& label) const;
    const std::vector<CatalogRecord>& all() const { return records_; }

private:
    std::string path_;
    std::vector<CatalogRecord> records_;
};

struct PipelineOptions {
    SweepOptions sweep;
    bool with_matrices = true;  // run the clique search and certificates
};

struct PipelineOutput {
    CatalogRecord record;
    std::vector<HadamardMatrix> reps;
    WeightEnumerator we;
};

PipelineOutput full_pipeline(const TernaryCode& c, const std::string& family,
                             const std::string& ra, const std::string& rb,
                             const PipelineOptions& opt = {});

// ---- reproduction reports ----

struct TableRow {
    std::string name, expected, computed;
    bool match = false;
    bool skipped = false;
};

struct TableReport {
    std::string id;
    std::vector<TableRow> rows;

    bool pass() const;  // every non-skipped row matches
    std::string to_text() const;
    std::string to_csv() const;
};

struct ReproduceOptions {
    SweepOptions sweep;
    std::string t_matrix_file;  // file with the order-17-automorphism matrices, blocks 1..11
    std::vector<int> sample;    // row subset; empty = all rows
};

// ids: "t1" (A9 of the matrix-generated codes), "t3" (A9 of the bordered
// double circulant codes), "t5" (A9 of the four-negacirculant codes),
// "t6" (tuples of the matrix codes and D-codes), "tuples" (tuples of the
// F-codes; "t7"/"t8" are aliases), "aut" (automorphism-order multisets),
// "dims" (dimensions and minimum weights of the matrix row-space codes)
TableReport reproduce_table(const std::string& id, const ReproduceOptions& opt = {});

}  // namespace f3had
