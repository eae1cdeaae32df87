#pragma once

#include <string>
#include <vector>

#include "quadres/complex.hpp"
#include "quadres/diagram.hpp"
#include "quadres/homology.hpp"

namespace quadres {

/// Local configuration certifying a nonzero cohomology class of the dual
/// complex: siblings b0, b1 whose only outgoing edges land on a common c0
/// with distinct labels s, t, and every incoming label l of b0 has
/// x_l * x_s in the ideal. The witness cochain is (x_s, 0) at b0, a cocycle
/// that no preimage through c0 can produce.
struct VVOccurrence {
    int c0 = 0;
    int b0 = 0;
    int b1 = 0;
    int s = 0;
    int t = 0;
    int position = 0;  // level of b0 = cochain position of the witness
    std::vector<int> b0_incoming_labels;
};

/// All occurrences with position <= top_level - 1, so that the incoming edges
/// of b0 are fully known in the truncated diagram.
std::vector<VVOccurrence> find_vv_patterns(const Diagram& d);

/// Cohomology dimension of the dualized complex at cochain position i,
/// internal degree u. Requires dual orientation.
int cohomology_dim(const FreeComplex& dual, int i, int u, const FieldChoice& field,
                   const BasisTable& table);

/// Internal degree of the witness (x_s, 0) at a given cochain position: the
/// dual generator sits in degree -position and x_s adds 1.
inline int vv_witness_degree(int position) { return 1 - position; }

struct ExtEvidence {
    RingSpec spec;
    int initial = 0;
    int L = 0;
    int T = 0;
    FieldChoice field;
    std::vector<int> nonzero_positions;                    // i in 1..L-1 with some H^i(u) > 0
    std::vector<std::pair<int, int>> nonzero_samples;      // (position, first u with H^i(u) > 0)
    std::vector<VVOccurrence> occurrences;

    std::string to_json() const;
};

/// Build, dualize, list nonzero cohomology positions (scanning internal
/// degrees with monomial degree u + i <= T), list vv occurrences, and check
/// that every occurrence position has nonzero cohomology in the witness
/// degree; a violation throws InternalConsistencyError.
ExtEvidence injective_dimension_evidence(const RingSpec& spec, int initial, int levels,
                                         const FieldChoice& field, int max_degree = -1);

}  // namespace quadres
