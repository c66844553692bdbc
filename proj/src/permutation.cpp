#include <sstream>

#include "artemis/circuit.hpp"
#include "artemis/domain.hpp"
#include "artemis/errors.hpp"

namespace artemis::plonkish {

PermutationPolys permutation_polynomials(const CircuitIndex& index) {
    size_t n = index.n();
    auto domain = EvaluationDomain<F>::make(index.log_n);
    auto omegas = domain.elements();

    PermutationPolys out;
    F delta = F::generator();
    F d = F::one();
    for (size_t t = 0; t < index.perm_columns.size(); t++) {
        out.deltas.push_back(d);
        d *= delta;
    }
    out.id_lagrange.resize(index.perm_columns.size());
    out.sigma_lagrange.resize(index.perm_columns.size());
    for (size_t t = 0; t < index.perm_columns.size(); t++) {
        out.id_lagrange[t].resize(n);
        out.sigma_lagrange[t].resize(n);
        for (size_t j = 0; j < n; j++) {
            out.id_lagrange[t][j] = out.deltas[t] * omegas[j];
            auto [t2, j2] = index.sigma[t][j];
            out.sigma_lagrange[t][j] = out.deltas[t2] * omegas[j2];
        }
    }
    return out;
}

namespace {

void write_column_id(ByteWriter& w, ColumnId c) {
    w.u8(uint8_t(c.kind));
    w.u32(c.index);
}

ColumnId read_column_id(ByteReader& r) {
    ColumnId c;
    c.kind = ColumnKind(r.u8());
    c.index = r.u32();
    return c;
}

void write_field_vec(ByteWriter& w, const std::vector<F>& v) {
    w.u64(v.size());
    for (const auto& x : v) x.to_bytes(w);
}

std::vector<F> read_field_vec(ByteReader& r) {
    std::vector<F> v(r.u64());
    for (auto& x : v) x = F::from_bytes(r);
    return v;
}

} // namespace

Bytes CircuitIndex::to_bytes() const {
    ByteWriter body;
    body.u32(log_n);
    body.u32(blinding_reserve);
    body.u32(max_gate_degree);
    body.u32(n_instance);

    body.u64(fixed.size());
    for (const auto& col : fixed) write_field_vec(body, col);

    body.u64(advice_phase.size());
    for (size_t i = 0; i < advice_phase.size(); i++) {
        body.u32(advice_phase[i]);
        body.u64(advice_challenge_deps[i].size());
        for (uint32_t d : advice_challenge_deps[i]) body.u32(d);
    }

    body.u64(challenges.size());
    for (const auto& c : challenges) {
        body.u32(c.phase);
        body.u64(c.label.size());
        body.raw(reinterpret_cast<const uint8_t*>(c.label.data()), c.label.size());
    }

    body.u64(gates.size());
    for (const auto& g : gates) {
        body.u64(g.name.size());
        body.raw(reinterpret_cast<const uint8_t*>(g.name.data()), g.name.size());
        g.poly.to_bytes(body);
    }

    body.u64(perm_columns.size());
    for (auto c : perm_columns) write_column_id(body, c);
    for (const auto& col : sigma) {
        body.u64(col.size());
        for (auto [t, j] : col) {
            body.u32(t);
            body.u32(j);
        }
    }

    ByteWriter w;
    w.section("CIDX", body.data());
    return w.take();
}

CircuitIndex CircuitIndex::from_bytes(ByteReader& outer) {
    Bytes payload = outer.section("CIDX");
    ByteReader r(payload);
    CircuitIndex idx;
    idx.log_n = r.u32();
    idx.blinding_reserve = r.u32();
    idx.max_gate_degree = r.u32();
    idx.n_instance = r.u32();

    idx.fixed.resize(r.u64());
    for (auto& col : idx.fixed) col = read_field_vec(r);

    size_t na = r.u64();
    idx.advice_phase.resize(na);
    idx.advice_challenge_deps.resize(na);
    for (size_t i = 0; i < na; i++) {
        idx.advice_phase[i] = r.u32();
        idx.advice_challenge_deps[i].resize(r.u64());
        for (auto& d : idx.advice_challenge_deps[i]) d = r.u32();
    }

    idx.challenges.resize(r.u64());
    for (auto& c : idx.challenges) {
        c.phase = r.u32();
        Bytes lbl = r.raw(r.u64());
        c.label.assign(lbl.begin(), lbl.end());
    }

    size_t ng = r.u64();
    for (size_t i = 0; i < ng; i++) {
        Bytes nm = r.raw(r.u64());
        std::string name(nm.begin(), nm.end());
        idx.gates.push_back({name, Expr::from_bytes(r)});
    }

    idx.perm_columns.resize(r.u64());
    for (auto& c : idx.perm_columns) c = read_column_id(r);
    idx.sigma.resize(idx.perm_columns.size());
    for (auto& col : idx.sigma) {
        col.resize(r.u64());
        for (auto& [t, j] : col) {
            t = r.u32();
            j = r.u32();
        }
    }
    return idx;
}

Bytes Assignment::to_bytes() const {
    ByteWriter body;
    body.u64(advice.size());
    for (const auto& col : advice) write_field_vec(body, col);
    body.u64(instance.size());
    for (const auto& col : instance) write_field_vec(body, col);
    body.u64(challenges.size());
    for (const auto& [id, v] : challenges) {
        body.u32(id);
        v.to_bytes(body);
    }
    ByteWriter w;
    w.section("ASGN", body.data());
    return w.take();
}

Assignment Assignment::from_bytes(ByteReader& outer) {
    Bytes payload = outer.section("ASGN");
    ByteReader r(payload);
    Assignment a;
    a.advice.resize(r.u64());
    for (auto& col : a.advice) col = read_field_vec(r);
    a.instance.resize(r.u64());
    for (auto& col : a.instance) col = read_field_vec(r);
    size_t nc = r.u64();
    for (size_t i = 0; i < nc; i++) {
        uint32_t id = r.u32();
        a.challenges.emplace(id, F::from_bytes(r));
    }
    return a;
}

std::string CircuitIndex::debug_dump(const Assignment* assignment) const {
    std::ostringstream os;
    size_t nn = n();
    os << "grid n=" << nn << " fixed=" << n_fixed() << " advice=" << n_advice()
       << " instance=" << n_instance << " gates=" << gates.size()
       << " perm_columns=" << perm_columns.size() << " usable=" << usable_rows() << "\n";
    auto hex = [](const F& v) {
        auto limbs = v.canonical();
        char buf[20];
        if (limbs[1] == 0 && limbs[2] == 0 && limbs[3] == 0) {
            snprintf(buf, sizeof(buf), "%llu", (unsigned long long)limbs[0]);
        } else {
            snprintf(buf, sizeof(buf), "..%04llx", (unsigned long long)(limbs[0] & 0xffff));
        }
        return std::string(buf);
    };
    size_t show = std::min(nn, size_t(40));
    for (size_t j = 0; j < show; j++) {
        os << "w^" << j << "\t";
        for (const auto& col : fixed) os << hex(col[j]) << "\t";
        if (assignment) {
            os << "|\t";
            for (const auto& col : assignment->advice) os << hex(col[j]) << "\t";
            os << "|\t";
            for (const auto& col : assignment->instance) os << hex(col[j]) << "\t";
        }
        os << "\n";
    }
    if (show < nn) os << "... (" << (nn - show) << " more rows)\n";
    return os.str();
}

} // namespace artemis::plonkish
