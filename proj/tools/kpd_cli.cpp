// kpd: verify partial-determinant laws and compute individual operations.
//
// Exit codes: 0 pass, 1 law violation, 2 usage or input error, 3 undefined value.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kpd/detroot.hpp"
#include "kpd/kron.hpp"
#include "kpd/suite.hpp"

namespace {

constexpr int exit_usage = 2;
constexpr int exit_undefined = 3;

struct ComputeArgs {
    std::string op;
    std::vector<std::string> files;
    std::string shape;
    std::string field = "rat";
    std::uint64_t power = 2;
};

kpd::FactorShape need_shape(const ComputeArgs& a) {
    if (a.shape.empty()) throw kpd::Error(kpd::Errc::invalid_argument, a.op + " needs --shape MxN");
    return kpd::FactorShape::parse(a.shape);
}

std::vector<kpd::Matrix> load(const ComputeArgs& a, std::size_t count) {
    if (a.files.size() != count) {
        throw kpd::Error(kpd::Errc::invalid_argument,
                         a.op + " takes " + std::to_string(count) + " matrix file(s), got " + std::to_string(a.files.size()));
    }
    std::vector<kpd::Matrix> out;
    for (const auto& f : a.files) out.push_back(kpd::read_matrix_file(f));
    return out;
}

int compute(const ComputeArgs& a) {
    using namespace kpd;
    auto print = [](const Matrix& m) {
        std::cout << format_matrix(m);
        return 0;
    };
    if (a.op == "kron") {
        const auto in = load(a, 2);
        return print(kron(in[0], in[1]));
    }
    if (a.op == "kron-sum") {
        const auto in = load(a, 2);
        return print(kron_sum(in[0], in[1]));
    }
    if (a.op == "shuffle") {
        load(a, 0);
        return print(shuffle(need_shape(a), Field::parse(a.field)));
    }
    if (a.op == "det") {
        const auto in = load(a, 1);
        std::cout << in[0].field().format(det(in[0])) << '\n';
        return 0;
    }
    if (a.op == "det1") return print(partial_det_1(load(a, 1)[0], need_shape(a)));
    if (a.op == "det2") return print(partial_det_2(load(a, 1)[0], need_shape(a)));
    if (a.op == "tr1") return print(partial_trace_1(load(a, 1)[0], need_shape(a)));
    if (a.op == "tr2") return print(partial_trace_2(load(a, 1)[0], need_shape(a)));
    if (a.op == "ptranspose") return print(partial_transpose_2(load(a, 1)[0], need_shape(a)));
    if (a.op == "hadamard-pow") return print(hadamard_power(load(a, 1)[0], a.power));
    if (a.op == "phi") {
        const auto in = load(a, 2);
        return print(phi(in[0], in[1]));
    }
    if (a.op == "Det") {
        const auto in = load(a, 1);
        const auto root = Det(in[0]);
        if (!root) {
            std::cerr << "undefined root: det = " << in[0].field().format(det(in[0])) << " has no " << in[0].rows()
                      << "-th root in " << in[0].field().name() << '\n';
            return exit_undefined;
        }
        std::cout << root->to_string() << '\n';
        return 0;
    }
    if (a.op == "Det1") {
        std::cout << format_grid(Det1_general(load(a, 1)[0], need_shape(a)));
        return 0;
    }
    throw Error(Errc::invalid_argument, "unknown operation '" + a.op + "'");
}

int exit_code_for(const kpd::Error& e) {
    switch (e.code()) {
    case kpd::Errc::not_in_dn:
    case kpd::Errc::undefined_normalization:
    case kpd::Errc::division_by_zero: return exit_undefined;
    default: return exit_usage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial determinants of Kronecker products: law verification and matrix operations"};
    app.require_subcommand(1);

    kpd::SuiteConfig config;
    std::string suite, field, replay_dir;
    auto* verify = app.add_subcommand("verify", "Run a verification suite or replay a failure");
    verify->add_option("suite", suite, "Suite id")->check(CLI::IsMember(kpd::suite_ids()));
    verify->add_option("--field", field, "rat | gf:<p> | c64");
    verify->add_option("--trials", config.trials, "Random instances per suite and field");
    verify->add_option("--seed", config.seed, "Base seed");
    verify->add_option("--max-dim", config.max_dim, "Largest factor dimension");
    verify->add_option("--m-max", config.m_max, "Hadamard power sweep bound");
    verify->add_option("--jobs", config.jobs, "Worker threads");
    verify->add_option("--replay", replay_dir, "Re-run the failure stored in DIR");
    verify->add_option("--artifacts", config.artifacts, "Directory for replay artifacts");

    ComputeArgs args;
    std::vector<std::string> file_flags;
    auto* comp = app.add_subcommand("compute", "Apply one operation to matrix files");
    comp->add_option("op", args.op, "Operation")
        ->required()
        ->check(CLI::IsMember({"kron", "kron-sum", "shuffle", "det", "det1", "det2", "tr1", "tr2", "ptranspose",
                               "hadamard-pow", "phi", "Det", "Det1"}));
    comp->add_option("files", args.files, "Input matrix files");
    comp->add_option("--file", file_flags, "Input matrix file (repeatable)");
    comp->add_option("--shape", args.shape, "Factor shape MxN");
    comp->add_option("--power", args.power, "Hadamard exponent")->check(CLI::PositiveNumber);
    comp->add_option("--field", args.field, "Field for shuffle output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (verify->parsed()) {
            if (!replay_dir.empty()) return kpd::replay(replay_dir, std::cout);
            if (suite.empty()) {
                std::cerr << "verify: a suite id or --replay DIR is required\n";
                return exit_usage;
            }
            config.suite_id = suite;
            if (!field.empty()) config.field = kpd::Field::parse(field);
            return kpd::run_suite(config, std::cout);
        }
        args.files.insert(args.files.begin(), file_flags.begin(), file_flags.end());
        return compute(args);
    } catch (const kpd::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
