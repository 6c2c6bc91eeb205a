//! Scratch probe for the A/B duality parameter transform.
use weylcat::blocks::dual;
use weylcat::quiver::{classify, is_isomorphic};
use weylcat::rat::{rat, ratio};
use weylcat::sp4_catalog::{jordan_series, Compass, JordanPoint};

fn main() {
    let pts = [
        JordanPoint::Finite(rat(0)),
        JordanPoint::Finite(rat(1)),
        JordanPoint::Finite(rat(-1)),
        JordanPoint::Finite(rat(2)),
        JordanPoint::Finite(ratio(1, 2)),
        JordanPoint::Finite(ratio(-1, 2)),
        JordanPoint::Finite(rat(-2)),
        JordanPoint::Infinity,
    ];
    for c in &pts {
        let a = jordan_series(Compass::N, 1, c).unwrap();
        let da = dual(&a);
        println!("dual(N^1_{}) label: {}", c.display(), classify(&da.rep, 0).unwrap().display());
        for cp in &pts {
            let b = jordan_series(Compass::E, 1, cp).unwrap();
            if is_isomorphic(&b.rep, &da.rep, 0).unwrap() {
                println!("  dual(N^1_{}) = E^1_{}", c.display(), cp.display());
            }
        }
    }
}
