#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "simpd/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw simpd::Error(simpd::ErrorCode::InvalidArgument,
                                  "cannot open '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

// Definitions from --job plus one synthetic query.
simpd::Job one_query_job(const std::string& job_path, const std::string& command,
                         const std::vector<std::string>& args) {
    simpd::Job defs;
    if (!job_path.empty()) {
        simpd::Job parsed = simpd::parse_job(read_file(job_path));
        for (auto& item : parsed.items)
            if (!std::holds_alternative<simpd::Query>(item))
                defs.items.push_back(std::move(item));
    }
    simpd::Query q;
    q.command = command;
    q.args = args;
    std::ostringstream echo;
    echo << command;
    for (const auto& a : args) echo << ' ' << a;
    q.echo = echo.str();
    q.line = 0;
    defs.items.push_back(std::move(q));
    return defs;
}

int run_and_print(const simpd::Job& job, const simpd::RunConfig& config) {
    simpd::RunResult result = simpd::run_job(job, config);
    std::cout << result.report;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simpd: exact contiguity and cover distances between simplicial maps"};
    app.require_subcommand(1);

    simpd::RunConfig config;
    app.add_option("--max-simplices", config.search.max_simplices,
                   "subdivision growth cap")
        ->capture_default_str();
    app.add_option("--max-frontier", config.search.max_frontier,
                   "contiguity search state cap")
        ->capture_default_str();
    app.add_flag("--with-oracle", config.with_oracle,
                 "cross-check results against the brute-force oracle");
    app.add_option("--cert-out", config.cert_out,
                   "directory for certificate files");

    std::string job_path, file_arg;
    std::vector<std::string> names;
    int b = 0, c = 0, base = 0, max_c = 16;
    std::vector<int> probe;
    std::string as_name;

    auto* run = app.add_subcommand("run", "execute a job file");
    run->add_option("job", job_path, "job file")->required();

    auto add_job_opt = [&](CLI::App* cmd) {
        cmd->add_option("--job", job_path, "file with complex and map definitions")
            ->required();
    };

    auto* validate = app.add_subcommand("validate", "check complex invariants");
    validate->add_option("complex", names, "complex name")->expected(1);
    add_job_opt(validate);

    auto* product = app.add_subcommand("product", "ordered product of two complexes");
    product->add_option("factors", names, "factor complexes")->expected(2);
    product->add_option("--as", as_name, "name for the product");
    add_job_opt(product);

    auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision");
    subdivide->add_option("complex", names, "complex name")->expected(1);
    subdivide->add_option("--b", b, "subdivision level")->required();
    subdivide->add_option("--as", as_name, "name for the result");
    add_job_opt(subdivide);

    auto* check_map = app.add_subcommand("check-map", "check a map is simplicial");
    check_map->add_option("map", names, "map name")->expected(1);
    add_job_opt(check_map);

    auto* contiguity = app.add_subcommand("contiguity", "least c with f ~_c g");
    contiguity->add_option("maps", names, "two map names")->expected(2);
    contiguity->add_option("--max-c", max_c, "search horizon")->capture_default_str();
    add_job_opt(contiguity);

    auto* simpdist = app.add_subcommand("simpdist", "cover distance of two maps");
    simpdist->add_option("maps", names, "two map names")->expected(2);
    simpdist->add_option("--b", b, "subdivision level")->required();
    simpdist->add_option("--c", c, "chain budget")->required();
    simpdist->add_option("--probe", probe, "probe table ranges BMAX CMAX")->expected(2);
    add_job_opt(simpdist);

    auto* sc = app.add_subcommand("sc", "cover distance of the two projections of KxK");
    sc->add_option("complex", names, "complex name")->expected(1);
    sc->add_option("--b", b, "subdivision level")->required();
    sc->add_option("--c", c, "chain budget")->required();
    add_job_opt(sc);

    auto* scat = app.add_subcommand("scat", "cover distance of identity vs constant");
    scat->add_option("complex", names, "complex name")->expected(1);
    scat->add_option("--base", base, "base vertex")->required();
    scat->add_option("--b", b, "subdivision level")->required();
    scat->add_option("--c", c, "chain budget")->required();
    add_job_opt(scat);

    auto* verify = app.add_subcommand("verify-cert", "re-check a certificate file");
    verify->add_option("file", file_arg, "certificate file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_and_print(simpd::parse_job(read_file(job_path)), config);

        std::vector<std::string> args;
        std::string command;
        if (validate->parsed()) {
            command = "validate";
            args = {names[0]};
        } else if (product->parsed()) {
            command = "product";
            args = {names[0], names[1]};
            if (!as_name.empty()) { args.push_back("as"); args.push_back(as_name); }
        } else if (subdivide->parsed()) {
            command = "subdivide";
            args = {names[0], "--b", std::to_string(b)};
            if (!as_name.empty()) { args.push_back("as"); args.push_back(as_name); }
        } else if (check_map->parsed()) {
            command = "check-map";
            args = {names[0]};
        } else if (contiguity->parsed()) {
            command = "contiguity";
            args = {names[0], names[1], "--max-c", std::to_string(max_c)};
        } else if (simpdist->parsed()) {
            command = "simpdist";
            args = {names[0], names[1], "--b", std::to_string(b), "--c", std::to_string(c)};
            if (!probe.empty()) {
                args.push_back("--probe");
                args.push_back(std::to_string(probe[0]));
                args.push_back(std::to_string(probe[1]));
            }
        } else if (sc->parsed()) {
            command = "sc";
            args = {names[0], "--b", std::to_string(b), "--c", std::to_string(c)};
        } else if (scat->parsed()) {
            command = "scat";
            args = {names[0], "--base", std::to_string(base), "--b", std::to_string(b),
                    "--c", std::to_string(c)};
        } else if (verify->parsed()) {
            simpd::Job job;
            simpd::Query q;
            q.command = "verify-cert";
            q.args = {file_arg};
            q.echo = "verify-cert " + file_arg;
            job.items.push_back(std::move(q));
            simpd::RunResult result = simpd::run_job(job, config);
            std::cout << result.report;
            if (result.exit_code != 0) return result.exit_code;
            return result.report.find("REJECTED") == std::string::npos ? 0 : 1;
        }
        return run_and_print(one_query_job(job_path, command, args), config);
    } catch (const simpd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
