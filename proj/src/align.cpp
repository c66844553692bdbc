#include "artemis/cp.hpp"
#include "artemis/errors.hpp"

namespace artemis::cp {

using plonkish::Cell;
using plonkish::CircuitBuilder;
using plonkish::CircuitIndex;
using plonkish::ColumnKind;
using plonkish::CommitIndexSet;

// One advice column per commitment holding the committed witness in external
// order on the evaluation domain, copy-constrained to the original cells.
// The pairing-based linking proof over these columns is out of scope; tests
// validate the alignment itself.
std::pair<CircuitIndex, std::vector<uint32_t>> align_index_transform(
    const CircuitIndex& circuit, const CommitIndexSet& icom) {
    size_t u = circuit.usable_rows();
    for (const auto& list : icom.lists)
        if (list.size() > u) throw WitnessTooLargeForColumn();

    CircuitBuilder b = CircuitBuilder::from_index(circuit);
    std::vector<uint32_t> cols;
    for (const auto& list : icom.lists) {
        uint32_t col = b.add_advice_column(0);
        cols.push_back(col);
        for (size_t o = 0; o < list.size(); o++)
            b.copy(list[o], Cell{{ColumnKind::Advice, col}, uint32_t(o)});
    }
    return {b.build(), cols};
}

void fill_aligned_columns(plonkish::Assignment& assignment,
                          const std::vector<uint32_t>& columns, const CommitIndexSet& icom) {
    if (columns.size() != icom.count()) throw LayoutMismatch();
    for (size_t k = 0; k < columns.size(); k++) {
        const auto& list = icom.lists[k];
        for (size_t o = 0; o < list.size(); o++)
            assignment.advice[columns[k]][o] =
                assignment.advice[list[o].column.index][list[o].row];
    }
}

} // namespace artemis::cp
