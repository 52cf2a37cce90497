#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "gradim/classify.hpp"
#include "gradim/json_io.hpp"
#include "gradim/parse.hpp"
#include "gradim/random_objects.hpp"

using namespace gradim;

namespace {

// Exit codes: 0 success / named label, 1 parse error, 2 backend or solver
// error, 3 Unresolved verdict.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kSolverError = 2;
constexpr int kUnresolved = 3;

struct Backend {
    enum class Kind { Rat, Cyc, Cpx } kind = Kind::Rat;
    unsigned order = 1;  // cyclotomic ambient order
};

Backend parse_backend(const std::string& text) {
    if (text == "rational") return {Backend::Kind::Rat, 1};
    if (text == "complex") return {Backend::Kind::Cpx, 1};
    if (text == "cyclotomic") return {Backend::Kind::Cyc, 1};
    if (text.rfind("cyclotomic:", 0) == 0) {
        unsigned m = 0;
        for (char ch : text.substr(11)) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("cyclotomic order must be a positive integer", 0);
            m = m * 10 + static_cast<unsigned>(ch - '0');
        }
        if (m < 1) throw ParseError("cyclotomic order must be >= 1", 0);
        return {Backend::Kind::Cyc, m};
    }
    throw ParseError("unknown backend \"" + text + "\" (rational|cyclotomic:<m>|complex)", 0);
}

struct Options {
    int n = 2;
    std::string backend_text = "rational";
    std::uint64_t seed = 0;
    unsigned trials = 200;
    std::string inline_text;  // -e
    std::string file;         // -f
    std::string format = "json";
    std::string target_path;  // preimage
    std::string log_path;     // scan
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("-n,--modulus", o.n, "grading modulus");
    sub->add_option("--backend", o.backend_text,
                    "coefficient field: rational|cyclotomic:<m>|complex");
    sub->add_option("--seed", o.seed, "seed for sampled decisions");
    sub->add_option("--trials", o.trials, "number of sampling trials");
    sub->add_option("-e,--expr", o.inline_text, "inline input text");
    sub->add_option("-f,--file", o.file, "input file");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

std::string read_input(const Options& o) {
    if (!o.inline_text.empty() && !o.file.empty())
        throw ParseError("use exactly one of -e and -f", 0);
    if (!o.inline_text.empty()) return o.inline_text;
    if (o.file.empty()) throw ParseError("missing input: pass -e <text> or -f <file>", 0);
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open input file: " + o.file, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <Scalar S>
std::string matrix_text(const Matrix<S>& m) {
    std::string s = "[";
    for (int i = 0; i < m.size(); ++i) {
        if (i) s += "; ";
        for (int j = 0; j < m.size(); ++j) {
            if (j) s += " ";
            s += scalar_traits<S>::str(m(i, j));
        }
    }
    return s + "]";
}

void emit(const Json& report, const Options& o) {
    if (o.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text rendering: one "key: value" line per field, matrices inline
    for (const auto& [key, value] : report.items()) {
        if (key == "certificates") {
            std::cout << "certificates: " << value.size() << "\n";
            continue;
        }
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

/// Re-evaluates every certificate before anything is printed; a mismatch is
/// an internal error, never silently emitted.
template <Scalar S>
void verify_certificates(const GradedPolynomial<S>& f,
                         const std::vector<EvaluationWitness<S>>& certs) {
    for (const auto& w : certs)
        if (!(f.evaluate(w.assignment) == w.value))
            throw Error("internal error: certificate failed re-verification");
}

template <Scalar S>
int cmd_classify(const Options& o, const Backend& be) {
    auto f = parse_polynomial<S>(read_input(o), o.n);
    ImageClassification<S> cls;
    if (f.is_multilinear()) {
        if (o.n == 2) {
            cls = classify_multilinear_m2(f);
        } else {
            cls = image_span(f, o.seed, static_cast<int>(o.trials)).prediction;
        }
    } else if constexpr (std::is_same_v<S, ComplexScalar>) {
        if (o.n != 2)
            throw Error("non-multilinear classification is available for modulus 2 only");
        std::map<int, Rational> unit_weights;
        for (const auto& [id, deg] : f.variables()) {
            (void)deg;
            unit_weights.emplace(id, Rational(1));
        }
        cls = classify_semihomogeneous_m2(f, unit_weights, static_cast<int>(o.trials), o.seed);
    } else {
        throw Error(
            "non-multilinear polynomials need the complex backend (semi-homogeneous sampling)");
    }
    verify_certificates(f, cls.certificates);
    (void)be;
    emit(classification_to_json(cls), o);
    return cls.label == ImageLabel::Unresolved ? kUnresolved : kOk;
}

template <Scalar S>
int cmd_identity(const Options& o) {
    auto f = parse_polynomial<S>(read_input(o), o.n);
    auto rep = is_graded_identity(f);
    Json out{{"identity", rep.identity}};
    if (rep.witness) {
        verify_certificates(f, {*rep.witness});
        out["witness"] = witness_to_json(*rep.witness);
    }
    emit(out, o);
    return kOk;
}

template <Scalar S>
int cmd_central(const Options& o) {
    auto f = parse_polynomial<S>(read_input(o), o.n);
    emit(Json{{"central", is_graded_central(f)}}, o);
    return kOk;
}

int cmd_circulant(const Options& o) {
    Json j = Json::parse(read_input(o));
    if (!j.is_array()) throw ParseError("circulant input must be a JSON array", 0);
    std::vector<Rational> alpha;
    for (const auto& v : j) alpha.push_back(gradim::detail::scalar_from_json<Rational>(v));
    auto rep = circulant_span(alpha);
    Json entries = Json::array();
    for (const auto& a : alpha) entries.push_back(scalar_traits<Rational>::str(a));
    emit(Json{{"n", static_cast<int>(alpha.size())},
              {"alpha", std::move(entries)},
              {"gcd_degree", rep.d},
              {"rank", rep.rank}},
         o);
    return kOk;
}

template <Scalar S>
int cmd_ratio(const Options& o) {
    Matrix<S> m = matrix_from_json<S>(Json::parse(read_input(o)));
    auto r = eigen_ratio(m);
    Json out{{"zero_eigenvalue", r.zero_eigenvalue},
             {"value", scalar_traits<S>::str(r.value)}};
    if (r.eigenvalues) {
        out["eigenvalues"] = Json::array(
            {ComplexScalar(r.eigenvalues->first).str(), ComplexScalar(r.eigenvalues->second).str()});
    }
    emit(out, o);
    return kOk;
}

/// The preimage command accepts the two-term shape c1*xa*xb + c2*xb*xa
/// (c2 possibly absent) and solves c1*(xa*xb - alpha*xb*xa) = target with
/// alpha = -c2/c1.
template <Scalar S>
int cmd_preimage(const Options& o) {
    using T = scalar_traits<S>;
    auto f = parse_polynomial<S>(read_input(o), o.n);
    const auto& mono = f.monomials();
    bool shaped = (mono.size() == 1 || mono.size() == 2) && mono[0].word.size() == 2 &&
                  mono[0].word[0] != mono[0].word[1];
    if (shaped && mono.size() == 2)
        shaped = mono[1].word == std::vector<int>{mono[0].word[1], mono[0].word[0]};
    if (!shaped)
        throw Error("preimage supports the binomial c1*xa*xb + c2*xb*xa (distinct variables)");
    const int a = mono[0].word[0], b = mono[0].word[1];
    const S c1 = mono[0].coeff;
    const S alpha = mono.size() == 2 ? -(mono[1].coeff * T::inverse(c1)) : T::zero();
    const int g = f.degree_of(a), h = f.degree_of(b);
    const int d = mod_index(g + h, o.n);

    if (o.target_path.empty()) throw ParseError("missing --target <matrix json file>", 0);
    Matrix<S> target = matrix_from_json<S>(Json::parse(read_file(o.target_path)));
    if (target.size() != o.n) throw DimensionError("target size does not match the modulus");
    Homogeneity hom = classify_homogeneity(target);
    if (hom.kind == Homogeneity::Mixed || (hom.kind == Homogeneity::Graded && hom.degree != d))
        throw DegreeMismatchError("target must be homogeneous of the polynomial's degree " +
                                  std::to_string(d));

    PreimageCertificate<S> cert =
        degree2_preimage<S>({o.n, alpha, g, h, project(target, d).scaled(T::inverse(c1))});
    std::map<int, HomogeneousMatrix<S>> assignment;
    assignment.emplace(a, cert.assignment.at(1));
    assignment.emplace(b, cert.assignment.at(2));
    Matrix<S> value = f.evaluate(assignment);
    if (!(value == target)) throw Error("internal error: preimage failed the round trip");

    if (o.format == "json") {
        Json ja = Json::object();
        for (const auto& [id, m] : assignment) ja["x" + std::to_string(id)] = matrix_to_json(m);
        emit(Json{{"assignment", std::move(ja)},
                  {"residual", cert.residual},
                  {"value", matrix_to_json(value)}},
             o);
    } else {
        for (const auto& [id, m] : assignment)
            std::cout << "x" << id << " = " << matrix_text(m.dense()) << "\n";
        std::cout << "residual: " << cert.residual << "\n";
    }
    return kOk;
}

template <Scalar S>
int cmd_scan(const Options& o, const Backend& be) {
    const unsigned trials = o.trials;
    std::vector<std::string> lines(trials);
    std::vector<ImageLabel> labels(trials, ImageLabel::Unresolved);
    std::vector<std::string> failures(trials);

    auto run_trial = [&](unsigned t) {
        Rng rng(Rng::derive(o.seed, t));
        auto f = random_scan_polynomial<S>(rng, o.n, 4, be.order);
        ImageClassification<S> cls;
        if (o.n == 2)
            cls = classify_multilinear_m2(f);
        else
            cls = image_span(f, Rng::derive(o.seed, t) ^ 1, 200).prediction;
        Json line{{"trial", t},
                  {"n", o.n},
                  {"polynomial", print_polynomial(f)},
                  {"label", image_label_name(cls.label)}};
        if (cls.degree) line["degree"] = *cls.degree;
        if (!cls.note.empty()) line["note"] = cls.note;
        labels[t] = cls.label;
        lines[t] = line.dump();
    };

    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), std::min(trials, 8u)));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (unsigned t = w; t < trials; t += workers) {
                try {
                    run_trial(t);
                } catch (const std::exception& e) {
                    failures[t] = e.what();
                }
            }
        });
    for (auto& th : pool) th.join();

    for (unsigned t = 0; t < trials; ++t)
        if (!failures[t].empty()) throw Error("trial " + std::to_string(t) + ": " + failures[t]);

    // JSONL to --log (or stdout); the summary goes to the remaining stream
    std::ofstream log_file;
    bool to_file = !o.log_path.empty();
    if (to_file) {
        log_file.open(o.log_path);
        if (!log_file) throw Error("cannot open log file: " + o.log_path);
    }
    std::ostream& log = to_file ? static_cast<std::ostream&>(log_file) : std::cout;
    for (unsigned t = 0; t < trials; ++t) log << lines[t] << "\n";

    std::map<std::string, int> counts;
    bool any_unresolved = false;
    for (ImageLabel l : labels) {
        ++counts[image_label_name(l)];
        if (l == ImageLabel::Unresolved) any_unresolved = true;
    }
    std::ostream& summary = to_file ? std::cout : std::cerr;
    summary << "scan n=" << o.n << " backend=" << o.backend_text << " trials=" << trials
            << " seed=" << o.seed << "\n";
    for (const auto& [name, count] : counts) summary << "  " << name << ": " << count << "\n";
    return any_unresolved && is_prime_modulus(o.n) ? kUnresolved : kOk;
}

template <class Fn>
int dispatch(const Backend& be, Fn&& fn) {
    switch (be.kind) {
        case Backend::Kind::Rat: return fn.template operator()<Rational>();
        case Backend::Kind::Cyc: return fn.template operator()<Cyclo>();
        case Backend::Kind::Cpx: return fn.template operator()<ComplexScalar>();
    }
    return kSolverError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"images of graded polynomials on matrix algebras under the cyclic grading"};
    app.require_subcommand(1);
    Options o;

    auto* classify = app.add_subcommand("classify", "classify the image of a polynomial");
    auto* preimage = app.add_subcommand("preimage", "solve f(X) = target for a binomial f");
    auto* identity = app.add_subcommand("identity", "test for a graded polynomial identity");
    auto* central = app.add_subcommand("central", "test for a graded central polynomial");
    auto* circulant = app.add_subcommand("circulant", "rank of a circulant matrix");
    auto* scan = app.add_subcommand("scan", "classify random multilinear polynomials");
    auto* ratio = app.add_subcommand("ratio", "eigenvalue-ratio invariant of a 2 x 2 matrix");
    for (auto* sub : {classify, preimage, identity, central, circulant, scan, ratio})
        add_common(sub, o);
    preimage->add_option("--target", o.target_path, "target matrix JSON file")->required();
    scan->add_option("--log", o.log_path, "write the JSONL log to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (o.n < 2) throw ParseError("modulus must be >= 2", 0);
        if (o.trials < 1) throw ParseError("trials must be >= 1", 0);
        Backend be = parse_backend(o.backend_text);
        if (*classify)
            return dispatch(be, [&]<Scalar S>() { return cmd_classify<S>(o, be); });
        if (*preimage)
            return dispatch(be, [&]<Scalar S>() { return cmd_preimage<S>(o); });
        if (*identity)
            return dispatch(be, [&]<Scalar S>() { return cmd_identity<S>(o); });
        if (*central)
            return dispatch(be, [&]<Scalar S>() { return cmd_central<S>(o); });
        if (*circulant) return cmd_circulant(o);
        if (*scan)
            return dispatch(be, [&]<Scalar S>() { return cmd_scan<S>(o, be); });
        if (*ratio)
            return dispatch(be, [&]<Scalar S>() { return cmd_ratio<S>(o); });
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverError;
    }
    return kParseError;
}
