//! Weyl-orbit enumeration by reflection closure.

use std::collections::{BTreeSet, VecDeque};

use super::{simple_roots, RootSystemError, SimpleType, Weight};

/// Closure of `{w}` under the simple reflections of `t`: the Weyl orbit of
/// `w` (the simple reflections generate the Weyl group).
///
/// Breadth-first search over exact rational vectors; the `BTreeSet` gives a
/// canonical ordering, so iteration over the result is deterministic. For a
/// minuscule highest weight the orbit is exactly the set of weights of the
/// representation, each with multiplicity 1.
pub fn weyl_orbit(t: SimpleType, w: &Weight) -> Result<BTreeSet<Weight>, RootSystemError> {
    let expected = t.ambient_dim();
    if w.dim() != expected {
        return Err(RootSystemError::DimensionMismatch {
            simple_type: t,
            expected,
            got: w.dim(),
        });
    }
    let roots = simple_roots(t);
    let mut orbit = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(current) = queue.pop_front() {
        for root in &roots {
            let image = current.reflect(root);
            if orbit.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(orbit)
}
