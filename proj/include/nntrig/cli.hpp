#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nntrig/io.hpp"
#include "nntrig/verify.hpp"

namespace nntrig::cli {

using io::json;

enum class Mode { exact, floating };

struct JobSpec {
    std::string command;
    Mode mode = Mode::exact;
    /// Inline JSON (starts with '{' or '['), a file path, or "-" for stdin.
    std::string input;
    double tol = 1e-9;
    std::optional<std::size_t> n;
    std::size_t samples = 25;
    std::optional<std::uint64_t> seed;
    std::string lemma = "all";
    bool pretty = false;
    std::string out;  // empty: the stream handed to run()
    unsigned jobs = 1;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"check",   "factor", "dis2",   "resultant", "discriminant",
                                            "mobius",  "starlike", "verify", "examples"};
    return c;
}

inline int exit_code(ErrorKind k) { return static_cast<int>(k); }

inline json read_input(const std::string& input) {
    std::string text;
    if (input.empty()) throw InputError("no input given");
    if (input.front() == '{' || input.front() == '[') {
        text = input;
    } else if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(input);
        if (!f) throw InputError("cannot open input file '" + input + "'");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

namespace detail {

template <Scalar S>
json run_one(const JobSpec& spec, const json& in) {
    ConeOptions opt;
    opt.tol = spec.tol;
    const auto& cmd = spec.command;
    if (cmd == "check") return io::to_json(classify(io::trig_from_json<S>(in), opt));
    if (cmd == "factor") {
        auto Y = io::trig_from_json<S>(in);
        auto v = classify(Y, opt);
        if (!v.factor) throw PreconditionError("factor: Y is outside the cone (min T = " + std::to_string(v.min_value) + ")");
        json j = io::to_json(v.factor->poly());
        j["class"] = to_string(v.classification);
        return j;
    }
    if (cmd == "dis2") return {{"dis2", io::scalar_report(dis2(io::trig_from_json<S>(in)))}};
    if (cmd == "resultant") {
        if (!in.is_object() || !in.contains("P") || !in.contains("Q"))
            throw InputError("resultant: expected {\"P\": poly, \"Q\": poly}");
        return {{"resultant", io::scalar_report(resultant(io::poly_from_json<S>(in.at("P")), io::poly_from_json<S>(in.at("Q"))))}};
    }
    if (cmd == "discriminant") return {{"discriminant", io::scalar_report(discriminant(io::poly_from_json<S>(in)))}};
    if (cmd == "mobius") return {{"mobius", io::scalar_report(mobius_discriminant(io::poly_from_json<S>(in)))}};
    if (cmd == "starlike") return io::to_json(is_starlike(io::poly_from_json<S>(in), opt));
    throw InputError("unknown command '" + cmd + "'");
}

inline json run_one_checked(const JobSpec& spec, const json& in, int& code) {
    try {
        code = 0;
        return spec.mode == Mode::exact ? run_one<GaussRational>(spec, in) : run_one<ComplexFloat>(spec, in);
    } catch (const Error& e) {
        code = exit_code(e.kind());
        return {{"error", e.what()}, {"exit", code}};
    } catch (const json::exception& e) {
        code = exit_code(ErrorKind::input);
        return {{"error", std::string("malformed input: ") + e.what()}, {"exit", code}};
    }
}

inline json run_verify(const JobSpec& spec, int& code) {
    if (!spec.seed) throw InputError("verify: --seed is required");
    const std::uint64_t seed = *spec.seed;
    const bool exact = spec.mode == Mode::exact;
    std::vector<verify::SuiteReport> reps;
    auto degrees = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> d;
        if (spec.n) d.push_back(*spec.n);
        else
            for (std::size_t k = lo; k <= hi; ++k) d.push_back(k);
        return d;
    };
    const auto& l = spec.lemma;
    if (l != "all" && l != "1" && l != "2" && l != "3" && l != "oracle")
        throw InputError("verify: --lemma must be 1, 2, 3, oracle or all");
    if (l == "all" || l == "1")
        for (auto n : degrees(1, 5))
            reps.push_back(exact ? verify::lemma1<GaussRational>(n, spec.samples, seed)
                                 : verify::lemma1<ComplexFloat>(n, spec.samples, seed));
    if (l == "all" || l == "2")
        for (auto n : degrees(1, 4))
            reps.push_back(exact ? verify::lemma2<GaussRational>(n, spec.samples, seed)
                                 : verify::lemma2<ComplexFloat>(n, spec.samples, seed));
    if (l == "all" || l == "3")
        for (auto n : degrees(2, 5)) {
            if (n < 2) throw InputError("verify: lemma 3 needs n >= 2");
            reps.push_back(exact ? verify::lemma3<GaussRational>(n, spec.samples, seed)
                                 : verify::lemma3<ComplexFloat>(n, spec.samples, seed));
        }
    if (l == "all" || l == "oracle")
        for (auto& r : verify::oracle(spec.n.value_or(8), spec.samples, seed)) reps.push_back(std::move(r));
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reps) {
        arr.push_back(r.to_json());
        ok = ok && r.ok();
    }
    code = ok ? 0 : exit_code(ErrorKind::verification);
    return {{"mode", exact ? "exact" : "float"}, {"seed", seed}, {"ok", ok}, {"suites", arr}};
}

inline json run_examples(const JobSpec& spec, int& code) {
    auto reps = verify::explicit_forms(spec.samples, spec.seed.value_or(1));
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reps) {
        arr.push_back(r.to_json());
        ok = ok && r.ok();
    }
    code = ok ? 0 : exit_code(ErrorKind::verification);
    return {{"ok", ok}, {"checks", arr}};
}

}  // namespace detail

/// Executes one job, writing its JSON report to `out` (or spec.out). Returns the
/// exit status: 0 success, 1 input error, 2 numeric failure, 3 verification failure.
/// A JSON array input is a batch: elements are processed independently (in
/// parallel when jobs > 1) and reported in input order; the status is the
/// largest element status.
inline int run(const JobSpec& spec, std::ostream& out) {
    int code = 0;
    json result;
    try {
        if (std::find(commands().begin(), commands().end(), spec.command) == commands().end())
            throw InputError("unknown command '" + spec.command + "'");
        if (spec.command == "verify") {
            result = detail::run_verify(spec, code);
        } else if (spec.command == "examples") {
            result = detail::run_examples(spec, code);
        } else {
            json in = read_input(spec.input);
            if (in.is_array()) {
                std::vector<json> outs(in.size());
                std::vector<int> codes(in.size(), 0);
                const std::size_t workers = std::max(1u, spec.jobs);
                std::vector<std::future<void>> pool;
                for (std::size_t w = 0; w < workers; ++w)
                    pool.push_back(std::async(std::launch::async, [&, w] {
                        for (std::size_t i = w; i < in.size(); i += workers)
                            outs[i] = detail::run_one_checked(spec, in[i], codes[i]);
                    }));
                for (auto& f : pool) f.get();
                result = json(outs);
                for (int c : codes) code = std::max(code, c);
            } else {
                result = detail::run_one_checked(spec, in, code);
            }
        }
    } catch (const Error& e) {
        code = exit_code(e.kind());
        result = {{"error", e.what()}, {"exit", code}};
    }

    const std::string text = spec.pretty ? result.dump(2) : result.dump();
    if (spec.out.empty()) {
        out << text << '\n';
    } else {
        std::ofstream f(spec.out);
        if (!f) {
            out << json{{"error", "cannot write '" + spec.out + "'"}}.dump() << '\n';
            return exit_code(ErrorKind::input);
        }
        f << text << '\n';
    }
    return code;
}

}  // namespace nntrig::cli
