// Command-line front end: build-code, verify <id>, weight-dist.
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource guard.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "antibch/errors.hpp"
#include "antibch/json_io.hpp"
#include "antibch/unit_group.hpp"
#include "antibch/verify.hpp"
#include "antibch/weights.hpp"

namespace {

using namespace antibch;

constexpr int kPass = 0, kFail = 1, kUsage = 2, kGuard = 3;

struct Options {
    VerifyConfig cfg;
    std::string format = "text";
    std::string side = "dual";
    std::string method = "auto";
    std::string verify_id;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->set_help_flag("--help", "print this help");
    cmd->add_option("--p", o.cfg.p, "characteristic")->check(CLI::PositiveNumber);
    cmd->add_option("--m", o.cfg.m, "q = delta^m")->check(CLI::PositiveNumber);
    cmd->add_option("--delta", o.cfg.delta, "designed distance, a power of p");
    cmd->add_option("--h", o.cfg.h, "alphabet GF(p^h) for classification")->check(CLI::PositiveNumber);
    cmd->add_option("--w", o.cfg.w, "weight for the support design");
    cmd->add_option("--u0", o.cfg.u0, "serial of u0 in GF(q^2)");
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--threads", o.cfg.threads, "worker threads (0 = all cores)");
    cmd->add_option("--seed", o.cfg.seed, "seed for randomized checks");
    cmd->add_option("--samples", o.cfg.samples, "samples for randomized checks");
}

int cmd_build_code(const Options& o) {
    o.cfg.validate();
    const CyclicCode c = antiprimitive_bch(o.cfg.q(), o.cfg.delta);
    if (o.format == "json") {
        Json out = code_to_json(c);
        out["field"] = field_to_json(c.field());
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "C_(" << c.q() << "," << c.length() << "," << o.cfg.delta << ",1): n = " << c.length()
                  << ", k = " << c.dimension() << '\n'
                  << "generator: " << poly_to_json(c.generator()).dump() << '\n'
                  << "defining set: " << Json(c.defining_set()).dump() << '\n';
    }
    return kPass;
}

int cmd_verify(const Options& o) {
    const SuiteResult r = run_suite(o.verify_id, o.cfg);
    if (o.format == "json") std::cout << to_json(r).dump(2) << '\n';
    else std::cout << to_text(r);
    return r.pass() ? kPass : kFail;
}

int cmd_weight_dist(const Options& o) {
    o.cfg.validate();
    const std::uint64_t q = o.cfg.q(), delta = o.cfg.delta;
    const CyclicCode c = antiprimitive_bch(q, delta);
    const CyclicCode d = c.dual();
    const UnitGroup U(c.field_ptr(), q);
    WeightDistribution w;
    bool consistent = true;
    if (o.side == "dual") {
        if (o.method == "exhaustive") w = weight_distribution_exhaustive(d, o.cfg.threads);
        else w = weight_distribution_trace(U, delta, o.cfg.threads);
    } else {
        const WeightDistribution wd = weight_distribution_trace(U, delta, o.cfg.threads);
        const WeightDistribution mw = macwilliams(wd, c.length(), d.dimension(), q);
        if (o.method == "macwilliams") {
            w = mw;
        } else {
            try {
                w = weight_distribution_exhaustive(c, o.cfg.threads);
                consistent = w == mw;
                std::cerr << "MacWilliams cross-check: " << (consistent ? "PASS" : "FAIL") << '\n';
            } catch (const ResourceGuardError&) {
                if (o.method == "exhaustive") throw;
                w = mw;
            }
        }
    }
    if (o.format == "json") {
        std::cout << weights_to_json(w).dump() << '\n';
    } else {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) std::cout << "A_" << i << " = " << w[i].str() << '\n';
    }
    return consistent ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Narrow-sense antiprimitive BCH codes: construction and verification"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build-code", "print the code descriptor of C_(q,q+1,delta,1)");
    add_common(build, o);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("id", o.verify_id, "suite id")->required()->check(CLI::IsMember(suite_ids()));
    add_common(verify, o);
    auto* wd = app.add_subcommand("weight-dist", "weight distribution of the code or its dual");
    add_common(wd, o);
    wd->add_option("--side", o.side, "primary or dual")->check(CLI::IsMember({"primary", "dual"}));
    wd->add_option("--method", o.method, "auto, exhaustive, trace or macwilliams")
        ->check(CLI::IsMember({"auto", "exhaustive", "trace", "macwilliams"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*build) return cmd_build_code(o);
        if (*verify) return cmd_verify(o);
        if (*wd) return cmd_weight_dist(o);
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "; try a smaller delta or m\n";
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
