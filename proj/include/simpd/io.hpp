#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simpd/complex.hpp"
#include "simpd/distance.hpp"
#include "simpd/maps.hpp"
#include "simpd/options.hpp"

namespace simpd {

// --- job model -------------------------------------------------------------

struct ComplexDef {
    std::string name;
    std::vector<Simplex> simplices; // raw lines, canonicalized by the loader
    int line = 0;
};

struct MapDef {
    std::string name;
    std::string domain;
    std::string codomain;
    std::vector<std::pair<Vertex, Vertex>> assignment;
    int line = 0;
};

struct Query {
    std::string command;
    std::vector<std::string> args;
    std::string echo; // original line, for the report header
    int line = 0;
};

using JobItem = std::variant<ComplexDef, MapDef, Query>;

struct Job {
    std::vector<JobItem> items;
};

/// Parses complex blocks, map blocks and `query ...` lines.
/// Throws ParseError with a line number on malformed input.
Job parse_job(const std::string& text);

// --- serialization ----------------------------------------------------------

std::string complex_to_text(const std::string& name, const OrderedComplex& k);
std::string map_to_text(const std::string& name, const std::string& domain_name,
                        const std::string& codomain_name, const SimplicialMap& f);
std::string certificate_to_text(const Certificate& cert);

/// Rebuilds a certificate. Piece complexes and chain steps are stored as
/// written; their validity against the query is verify_certificate's job.
Certificate parse_certificate(const std::string& text);

// --- execution ---------------------------------------------------------------

struct RunConfig {
    SearchOptions search;
    bool with_oracle = false;
    std::string cert_out; // directory for certificate files; empty = none
};

struct RunResult {
    std::string report;
    int exit_code = 0; // 0 all decided, 1 error, 2 undecided
};

/// Executes the job's queries in order and renders one report block per
/// query. Reports are deterministic: identical jobs yield identical bytes.
RunResult run_job(const Job& job, const RunConfig& config = {});

RunResult run_job_text(const std::string& text, const RunConfig& config = {});

} // namespace simpd
