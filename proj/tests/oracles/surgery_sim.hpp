// Executes a lowered instruction stream on the statevector oracle. Data patch
// q is register qubit q; every ancilla and magic patch shares one scratch
// qubit (index num_data) because the streams keep at most one alive and each
// measurement resets it to |0>.
#ifndef LATSURG_TESTS_SURGERY_SIM_HPP
#define LATSURG_TESTS_SURGERY_SIM_HPP

#include "oracles/statevector.hpp"

#include "latsurg/lowering.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Branch {
    State state;            // data qubits only
    double probability{1};  // product of the chosen outcome probabilities
};

// `choose(k)` gives the outcome of the k-th measurement in stream order.
inline Branch execute(const std::vector<latsurg::SurgeryOp>& ops, const State& data,
                      const std::function<int(std::size_t)>& choose) {
    using latsurg::PatchRole;
    using latsurg::SurgeryOpKind;

    const std::size_t scratch = data.n;
    State s(data.n + 1);
    for (std::size_t i = 0; i < data.a.size(); ++i)
        s.a[i] = data.a[i];

    auto qubit = [&](latsurg::PatchId p) { return p.role == PatchRole::Data ? std::size_t{p.index} : scratch; };
    std::vector<int> outcome(ops.size(), 0);
    std::size_t measured = 0;
    double probability = 1;

    auto fires = [&](const latsurg::Condition& c) {
        int parity = c.negated ? 1 : 0;
        for (const auto src : c.sources)
            parity ^= outcome.at(src);
        return parity == 1;
    };
    auto reset_scratch = [&](int value) {
        if (value)
            s.apply(kX, scratch);
    };

    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto& op = ops[i];
        switch (op.kind) {
            case SurgeryOpKind::InitAncillaPlus: s.apply(kH, qubit(op.first)); break;
            case SurgeryOpKind::InitAncillaZero: break;
            case SurgeryOpKind::RequestMagicState:
                s.apply(kH, qubit(op.first));
                s.apply(kT, qubit(op.first));
                break;
            case SurgeryOpKind::MeasureZZ:
            case SurgeryOpKind::MeasureXX: {
                const Mat2& p = op.kind == SurgeryOpKind::MeasureZZ ? kZ : kX;
                outcome[i] = choose(measured++);
                probability *= s.project({qubit(op.first), qubit(op.second)}, {p, p}, outcome[i]);
                if (probability < 1e-12)
                    return {State(data.n), 0.0};
                break;
            }
            case SurgeryOpKind::MeasurePatchZ:
            case SurgeryOpKind::MeasurePatchX: {
                const bool x = op.kind == SurgeryOpKind::MeasurePatchX;
                outcome[i] = choose(measured++);
                probability *= s.project({qubit(op.first)}, {x ? kX : kZ}, outcome[i]);
                if (probability < 1e-12)
                    return {State(data.n), 0.0};
                if (qubit(op.first) == scratch) {
                    if (x)
                        s.apply(kH, scratch);
                    reset_scratch(outcome[i]);
                }
                break;
            }
            case SurgeryOpKind::DirectH: s.apply(kH, qubit(op.first)); break;
            case SurgeryOpKind::DirectS: s.apply(kS, qubit(op.first)); break;
            case SurgeryOpKind::TrackPauliX: s.apply(kX, qubit(op.first)); break;
            case SurgeryOpKind::TrackPauliZ: s.apply(kZ, qubit(op.first)); break;
            case SurgeryOpKind::RotatePatch: break;
            case SurgeryOpKind::ConditionalS:
                if (fires(op.condition))
                    s.apply(kS, qubit(op.first));
                break;
            case SurgeryOpKind::ConditionalPauli:
                if (fires(op.condition))
                    s.apply(op.pauli == latsurg::Pauli::X ? kX : kZ, qubit(op.first));
                break;
        }
    }
    return {s.drop(scratch, 0), probability};
}

inline std::size_t count_measurements(const std::vector<latsurg::SurgeryOp>& ops) {
    std::size_t k = 0;
    for (const auto& op : ops)
        k += op.is_measurement() ? 1 : 0;
    return k;
}

}  // namespace oracle

#endif  // LATSURG_TESTS_SURGERY_SIM_HPP
