#include "qlp/cli.hpp"

#include "qlp/bound.hpp"
#include "qlp/errors.hpp"
#include "qlp/json_io.hpp"
#include "qlp/stabilizer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace qlp {

namespace {

class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw io_error("cannot write '" + path + "'");
}

Rational integer_dimension(const std::string& text, const char* flag)
{
    Rational k = parse_rational(text);
    if (!is_integer(k) || k < 1)
        throw domain_error(std::string(flag) + " must be a positive integer (got " + text + ")");
    return k;
}

bool parse_bool(const std::string& s)
{
    if (s == "true" || s == "1" || s == "pure")
        return true;
    if (s == "false" || s == "0" || s == "impure")
        return false;
    throw parse_error("expected a boolean, got '" + s + "'");
}

unsigned parse_unsigned(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used == s.size() && s.find('-') == std::string::npos && v <= 1u << 20)
            return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw parse_error(std::string(what) + ": expected a nonnegative integer, got '" + s + "'");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    return parts;
}

unsigned table_limit()
{
    const char* env = std::getenv("QLP_MAX_N");
    if (!env || !*env)
        return default_table_limit;
    return parse_unsigned(env, "QLP_MAX_N");
}

struct Options {
    unsigned n = 0;
    unsigned d = 0;
    std::string K;
    std::string Kprime;
    bool pure = false;
    std::string formulation = "abs";
    std::string strategy = "binary";
    std::string cert_path;
    std::string in_path;
    std::string out_path;
    std::string map = "macwilliams";
    std::string code_path;
    std::string lp_params;
    unsigned n_max = 0;
    unsigned d_max = 0;
    unsigned jobs = 1;
    unsigned oracle_max_n = default_oracle_max_n;
};

int cmd_check(const Options& o, std::ostream& out)
{
    CodeParams params{o.n, integer_dimension(o.K, "--K"), o.d, o.pure};
    BoundResult r = check(params, parse_formulation(o.formulation));
    out << (r.feasible() ? "FEASIBLE" : "INFEASIBLE") << '\n';
    if (!o.cert_path.empty())
        write_output(o.cert_path, dump(certificate_to_json(r.certificate, r.lp.hash())), out);
    return r.feasible() ? exit_ok : exit_negative;
}

int cmd_maxk(const Options& o, std::ostream& out)
{
    SearchStrategy strategy;
    if (o.strategy == "binary")
        strategy = SearchStrategy::binary;
    else if (o.strategy == "linear")
        strategy = SearchStrategy::linear;
    else
        throw usage_error("--strategy must be binary or linear");
    auto k = max_k(o.n, o.d, o.pure, strategy, parse_formulation(o.formulation));
    if (k)
        out << *k << '\n';
    else
        out << "NONE\n";
    return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out)
{
    BoundTable t = table(o.n_max, o.d_max, o.pure, o.jobs, table_limit());
    write_output(o.out_path, t.to_csv(), out);
    return exit_ok;
}

int cmd_transform(const Options& o, std::ostream& out)
{
    HomPoly p = poly_from_json(parse_json(read_file(o.in_path)));
    if (o.map == "macwilliams")
        p = dual_transform(p);
    else if (o.map == "shadow")
        p = shadow_transform(p);
    else
        throw usage_error("--map must be macwilliams or shadow");
    write_output(o.out_path, dump(poly_to_json(p)), out);
    return exit_ok;
}

int cmd_average_subcode(const Options& o, std::ostream& out)
{
    EnumeratorDocument doc = enumerator_from_json(parse_json(read_file(o.in_path)));
    Rational K = doc.K;
    if (!o.K.empty()) {
        K = parse_rational(o.K);
        if (K != doc.K)
            throw domain_error("--K " + o.K + " disagrees with K=" + to_string(doc.K) + " in the enumerator file");
    }
    const Rational Kp = parse_rational(o.Kprime);
    auto [a_hat, b_hat] = average_subcode(doc.enumerator.A, doc.enumerator.B, K, Kp);
    EnumeratorABS averaged{a_hat, b_hat, average_subcode_shadow(doc.enumerator.S, K, Kp)};
    write_output(o.out_path, dump(enumerator_to_json(doc.n, Kp, averaged)), out);
    return exit_ok;
}

int cmd_random_enum(const Options& o, std::ostream& out)
{
    write_output(o.out_path, dump(poly_to_json(random_code_enumerator(o.n, integer_dimension(o.K, "--K")))), out);
    return exit_ok;
}

int cmd_stab_enum(const Options& o, std::ostream& out)
{
    StabilizerCode code = StabilizerCode::parse(read_file(o.code_path));
    StabilizerEnumerators e = enumerators_dense(code, o.oracle_max_n);
    EnumeratorABS full{e.A, e.B, shadow_transform(e.A)};
    write_output(o.out_path, dump(enumerator_to_json(code.n, e.K, full)), out);
    return exit_ok;
}

int cmd_verify_cert(const Options& o, std::ostream& out)
{
    auto parts = split(o.lp_params, ',');
    if (parts.size() < 3 || parts.size() > 5)
        throw usage_error("--lp-params expects \"n,K,d[,pure[,formulation]]\"");
    CodeParams params{parse_unsigned(parts[0], "n"), integer_dimension(parts[1], "K"), parse_unsigned(parts[2], "d"),
                      parts.size() > 3 && parse_bool(parts[3])};
    Formulation f = parts.size() > 4 ? parse_formulation(parts[4]) : Formulation::abs;
    params.validate();
    if (params.K == 1)
        f = Formulation::abs;
    std::string hash;
    Certificate cert = certificate_from_json(parse_json(read_file(o.cert_path)), &hash);
    LinearProgram lp = build_constraints(params, f);
    if (hash != lp.hash()) {
        out << "INVALID (lp_hash does not match the system for these parameters)\n";
        return exit_negative;
    }
    bool valid = false;
    try {
        valid = verify_certificate(lp, cert);
    } catch (const std::invalid_argument& e) {
        out << "INVALID (" << e.what() << ")\n";
        return exit_negative;
    }
    out << (valid ? "VALID" : "INVALID") << '\n';
    return valid ? exit_ok : exit_negative;
}

int cmd_audit(const Options& o, std::ostream& out)
{
    CodeParams params{o.n, integer_dimension(o.K, "--K"), o.d, o.pure};
    AuditReport audit = monotonicity_audit(params);
    for (const auto& e : audit.entries) {
        out << "K'=" << to_string(e.subcode_dim) << ' ' << (e.report.passed() ? "pass" : "FAIL");
        if (params.pure)
            out << (e.purity_preserved ? " pure" : " PURITY-LOST");
        out << ' ' << poly_to_json(e.averaged).dump() << '\n';
        if (!e.report.passed())
            out << e.report.summary();
    }
    out << (audit.passed() ? "PASS" : "FAIL") << '\n';
    return audit.passed() ? exit_ok : exit_negative;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact quantum linear programming bound engine"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);
    Options o;

    auto add_code = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--n", o.n, "number of qubits")->required()->check(CLI::PositiveNumber);
        if (with_k)
            sub->add_option("--K", o.K, "code dimension (integer)")->required();
        sub->add_option("--d", o.d, "minimum distance")->required()->check(CLI::PositiveNumber);
        sub->add_flag("--pure", o.pure, "restrict to pure codes");
    };
    auto add_formulation = [&](CLI::App* sub) {
        sub->add_option("--formulation", o.formulation, "abs or cd")->check(CLI::IsMember({"abs", "cd"}));
    };

    auto* check_cmd = app.add_subcommand("check", "decide feasibility for ((n,K,d))");
    add_code(check_cmd, true);
    add_formulation(check_cmd);
    check_cmd->add_option("--cert", o.cert_path, "write the certificate JSON here");

    auto* maxk_cmd = app.add_subcommand("maxk", "largest feasible K for (n,d)");
    add_code(maxk_cmd, false);
    add_formulation(maxk_cmd);
    maxk_cmd->add_option("--strategy", o.strategy, "binary or linear")->check(CLI::IsMember({"binary", "linear"}));

    auto* table_cmd = app.add_subcommand("table", "CSV table of max_k over n <= nmax, d <= dmax");
    table_cmd->add_option("--nmax", o.n_max)->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--dmax", o.d_max)->required()->check(CLI::PositiveNumber);
    table_cmd->add_flag("--pure", o.pure);
    table_cmd->add_option("--out", o.out_path, "output CSV ('-' for stdout)")->required();
    table_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* transform_cmd = app.add_subcommand("transform", "apply the MacWilliams or shadow substitution");
    transform_cmd->add_option("--in", o.in_path, "polynomial JSON")->required();
    transform_cmd->add_option("--map", o.map)->required()->check(CLI::IsMember({"macwilliams", "shadow"}));
    transform_cmd->add_option("--out", o.out_path, "output JSON (default stdout)");

    auto* avg_cmd = app.add_subcommand("average-subcode", "expected enumerators of a random K'-dimensional subcode");
    avg_cmd->add_option("--in", o.in_path, "enumerator JSON")->required();
    avg_cmd->add_option("--K", o.K, "dimension of the parent code (defaults to the file's K)");
    avg_cmd->add_option("--Kprime", o.Kprime, "subcode dimension")->required();
    avg_cmd->add_option("--out", o.out_path);

    auto* random_cmd = app.add_subcommand("random-enum", "average weight enumerator of a random ((n,K)) code");
    random_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--K", o.K)->required();
    random_cmd->add_option("--out", o.out_path);

    auto* stab_cmd = app.add_subcommand("stab-enum", "brute-force enumerators of a stabilizer code");
    stab_cmd->add_option("--code", o.code_path, "generator file, one Pauli string per line")->required();
    stab_cmd->add_option("--max-n", o.oracle_max_n, "qubit limit for the dense computation");
    stab_cmd->add_option("--out", o.out_path);

    auto* verify_cmd = app.add_subcommand("verify-cert", "re-check a certificate written by check");
    verify_cmd->add_option("--lp-params", o.lp_params, "\"n,K,d,pure,formulation\"")->required();
    verify_cmd->add_option("--cert", o.cert_path)->required();

    auto* audit_cmd = app.add_subcommand("monotonicity-audit", "push a witness down to every K' < K");
    add_code(audit_cmd, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_error;
    }

    try {
        if (*check_cmd)
            return cmd_check(o, out);
        if (*maxk_cmd)
            return cmd_maxk(o, out);
        if (*table_cmd)
            return cmd_table(o, out);
        if (*transform_cmd)
            return cmd_transform(o, out);
        if (*avg_cmd)
            return cmd_average_subcode(o, out);
        if (*random_cmd)
            return cmd_random_enum(o, out);
        if (*stab_cmd)
            return cmd_stab_enum(o, out);
        if (*verify_cmd)
            return cmd_verify_cert(o, out);
        if (*audit_cmd)
            return cmd_audit(o, out);
    } catch (const usage_error& e) {
        err << "error: usage: " << e.what() << '\n';
    } catch (const parse_error& e) {
        err << "error: malformed input: " << e.what() << '\n';
    } catch (const domain_error& e) {
        err << "error: invalid parameters: " << e.what() << '\n';
    } catch (const limit_error& e) {
        err << "error: size limit: " << e.what() << '\n';
    } catch (const invalid_code_error& e) {
        err << "error: invalid stabilizer code: " << e.what() << '\n';
    } catch (const io_error& e) {
        err << "error: io: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
    }
    return exit_error;
}

} // namespace qlp
