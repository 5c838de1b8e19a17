#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "logsurf/errors.hpp"
#include "logsurf/io.hpp"
#include "logsurf/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitAmbiguous = 4;
constexpr int kExitNotPseudoEffective = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw logsurf::ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

logsurf::LogSurface load_valid_surface(const std::string& path) {
    const logsurf::LogSurface x = logsurf::parse_surface(read_file(path));
    const auto violations = logsurf::validate(x);
    if (!violations.empty()) {
        std::ostringstream message;
        message << "surface fails validation:";
        for (const auto& v : violations) {
            message << "\n  " << v.code << ": " << v.detail;
        }
        throw logsurf::PreconditionError(message.str());
    }
    return x;
}

struct Options {
    std::string file;
    std::string klass;
    std::string theta;
    std::string tiebreak = "list";
    bool human = false;
};

int dispatch(const std::string& command, const Options& opt) {
    using namespace logsurf;
    if (command == "validate") {
        const LogSurface x = parse_surface(read_file(opt.file));
        std::cout << report_validate(x, opt.human);
        return validate(x).empty() ? kExitOk : kExitValidation;
    }
    if (command == "classify") {
        std::cout << report_classify(load_valid_surface(opt.file), opt.human);
        return kExitOk;
    }
    if (command == "mmp") {
        const auto tb = tiebreak_from_string(opt.tiebreak);
        if (!tb) {
            throw ParseError("unknown tie-break order '" + opt.tiebreak + "'");
        }
        std::cout << report_mmp(load_valid_surface(opt.file), *tb, opt.human);
        return kExitOk;
    }
    if (command == "zariski") {
        const LogSurface x = load_valid_surface(opt.file);
        std::cout << report_zariski(x, parse_class_expr(x, opt.klass), opt.human);
        return kExitOk;
    }
    if (command == "lct") {
        const LogSurface x = load_valid_surface(opt.file);
        std::cout << report_lct(x, parse_coefficient_list(opt.theta), opt.human);
        return kExitOk;
    }
    if (command == "pullback") {
        const LogSurface x = load_valid_surface(opt.file);
        std::cout << report_pullback(x, parse_class_expr(x, opt.klass), opt.human);
        return kExitOk;
    }
    throw logsurf::LogicError("unhandled command " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logsurf: exact intersection theory, singularities and the adjoint contraction "
                 "program for combinatorial log surfaces"};
    app.require_subcommand(1);

    Options opt;
    bool json_flag = false;

    auto add_common = [&](CLI::App* cmd, bool needs_class, bool needs_theta) {
        cmd->add_option("file", opt.file, "surface description file (JSON)")->required();
        cmd->add_flag("--json", json_flag, "machine-readable output (default)");
        cmd->add_flag("--trace", opt.human, "human-readable output instead of JSON");
        if (needs_class) {
            cmd->add_option("--class", opt.klass, "divisor class, e.g. 'H + 2 E1'")->required();
        }
        if (needs_theta) {
            cmd->add_option("--theta", opt.theta, "effective divisor as name=p/q[,name=p/q...]")->required();
        }
        return cmd;
    };

    add_common(app.add_subcommand("classify", "log pullback, discrepancies and klt/lc classification"),
               false, false);
    auto* mmp_cmd = add_common(
        app.add_subcommand("mmp", "run the adjoint contraction program with all invariant checks"),
        false, false);
    mmp_cmd->add_option("--tiebreak", opt.tiebreak, "candidate order: list | reversed | rotated");
    add_common(app.add_subcommand("zariski", "Zariski decomposition of a class"), true, false);
    add_common(app.add_subcommand("lct", "log canonical threshold against an effective divisor"),
               false, true);
    add_common(app.add_subcommand("pullback", "orthogonal pullback of a class to the smooth model"),
               true, false);
    add_common(app.add_subcommand("validate", "audit every surface invariant"), false, false);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(command, opt);
    } catch (const logsurf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const logsurf::AmbiguousConfiguration& e) {
        std::cerr << "ambiguous configuration: " << e.what() << "\n";
        return kExitAmbiguous;
    } catch (const logsurf::NotPseudoEffective& e) {
        std::cerr << "not pseudo-effective: " << e.what() << "\n";
        return kExitNotPseudoEffective;
    } catch (const logsurf::LogicError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const logsurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
