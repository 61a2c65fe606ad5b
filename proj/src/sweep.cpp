#include "curvegraph/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <thread>

#include "curvegraph/spectral.hpp"

namespace curvegraph {

namespace {

SweepRow sweep_row(GroupKind family, int p, const SweepOptions& opts) {
    FamilyInstance inst =
        family == GroupKind::torelli ? torelli_family(p) : purebraid_family(p);
    LowerBoundRecord lower = family == GroupKind::torelli
                                 ? lower_bound(GroupKind::torelli, p, 0)
                                 : lower_bound(GroupKind::purebraid, 0, p);
    UpperBoundCertificate cert = certify_upper(inst, 2LL * p + 8, CertifyMode::Boolean);
    SpectralResult spec = dilatation(word_matrix(inst.config, inst.word), opts.tol, opts.max_iters);

    SweepRow row;
    row.parameter = p;
    row.lower_bound = lower.bound;
    row.upper_bound = cert.bound;
    row.j = cert.j;
    row.dilatation = spec.dilatation;
    row.normalized_upper = (Rational(p) * cert.bound).to_double();
    row.normalized_lower = (Rational(p) * lower.bound).to_double();
    return row;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::vector<SweepRow> run_sweep(GroupKind family, int from, int to, const SweepOptions& opts) {
    if (family == GroupKind::pmod)
        throw PreconditionError("no generated family for pmod; sweep torelli or purebraid");
    if (from > to) return {};
    const int min_param = family == GroupKind::torelli ? 13 : 4;
    if (from < min_param)
        throw PreconditionError("sweep start " + std::to_string(from) + " is below the family "
                                "minimum " + std::to_string(min_param));
    if (to > 200 && !opts.force)
        throw PreconditionError("sweep cap is 200; pass force to exceed it");

    const std::size_t count = static_cast<std::size_t>(to - from + 1);
    std::vector<SweepRow> rows(count);
    std::vector<std::exception_ptr> errors(count);

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(count));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = sweep_row(family, from + static_cast<int>(i), opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "parameter,lower_bound,upper_bound,j,dilatation,normalized_upper,normalized_lower\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.parameter);
        out += ',';
        out += r.lower_bound.str();
        out += ',';
        out += r.upper_bound.str();
        out += ',';
        out += std::to_string(r.j);
        out += ',';
        out += format_double(r.dilatation);
        out += ',';
        out += format_double(r.normalized_upper);
        out += ',';
        out += format_double(r.normalized_lower);
        out += '\n';
    }
    return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw StructuralError("cannot write " + path);
    out << sweep_csv(rows);
    if (!out) throw StructuralError("write to " + path + " failed");
}

} // namespace curvegraph
