//! Benchmarks live in `benches/`. Run with `cargo bench -p lieorbit-bench`.

use lieorbit::cascade::compute_cascade;
use lieorbit::{CascadeSet, LieAlgebra, RootSystem};

/// Root system, algebra and cascade of a type given by name, such as `"E8"`.
pub fn fixture(name: &str) -> (RootSystem, LieAlgebra, CascadeSet) {
    let rs = RootSystem::new(name.parse().expect("valid type name"));
    let g = LieAlgebra::build(&rs).expect("algebra builds");
    let cs = compute_cascade(&rs).to_set();
    (rs, g, cs)
}
