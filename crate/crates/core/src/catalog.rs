//! Reference instances: named generator vectors together with their
//! published minimum distances and weight enumerators.
//!
//! Published enumerators are kept verbatim, including the ones that fail
//! `sum A_i = 2^n`; callers decide how to treat those.

use crate::gf2::GeneratorVector;

fn parse(s: &str) -> GeneratorVector {
    s.parse().expect("catalog vectors are well formed")
}

/// Quadratic-residue graph on 17 vertices, the (4,4)-Ramsey graph.
pub fn alpha17() -> GeneratorVector {
    parse("0,1,1,0,1,0,0,0,1,1,0,0,0,1,0,1,1")
}

/// Circulant graph `C(19, {1,2,4,9})`, the starting point of the search.
pub fn alpha19() -> GeneratorVector {
    parse("0,1,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,1")
}

/// `alpha19` with `b_2` flipped.
pub fn alpha19_1() -> GeneratorVector {
    parse("0,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,1")
}

pub fn alpha19_2() -> GeneratorVector {
    parse("0,1,1,0,1,0,0,0,0,0,1,0,0,0,0,1,0,1,1")
}

pub fn alpha19_3() -> GeneratorVector {
    parse("0,1,1,0,1,0,0,0,0,1,0,0,0,0,0,1,0,1,1")
}

pub fn alpha19_4() -> GeneratorVector {
    parse("0,1,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0")
}

pub fn alpha25_a() -> GeneratorVector {
    parse("0,1,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,0,1,1")
}

pub fn alpha25_b() -> GeneratorVector {
    parse("0,1,1,0,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,1")
}

pub fn alpha25_1() -> GeneratorVector {
    parse("0,1,0,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,1,0,1,1")
}

pub fn alpha25_2() -> GeneratorVector {
    parse("0,1,1,0,1,0,1,0,1,0,0,0,0,1,1,0,0,0,0,1,0,1,0,0,1")
}

/// Additive-code vector of order 30 with its `omega` entry replaced by 0.
pub fn alpha30() -> GeneratorVector {
    parse("0,0,1,1,0,0,0,0,1,1,0,1,1,1,1,1,1,1,1,1,0,1,1,0,0,0,0,1,1,0")
}

pub fn alpha15() -> GeneratorVector {
    parse("0,0,1,1,1,0,0,1,1,0,0,1,1,1,0")
}

pub fn alpha15_1() -> GeneratorVector {
    parse("0,0,1,1,1,0,0,1,1,0,0,1,1,0,0")
}

pub const W_ALPHA19_1: &str = "1+133z^8+2052z^10+10108z^12+36575z^14+85595z^16+127680z^18\
+127680z^20+85595z^22+36575z^24+10108z^26+2052z^28+133z^30+z^38";

pub const W_ALPHA19_2: &str = "1+190z^8+1767z^10+10507z^12+36860z^14+84341z^16+128478z^18\
+128478z^20+84341z^22+36860z^24+10507z^26+1767z^28+190z^30+z^38";

/// Printed for both `alpha25_1` and `alpha25_2`; fails the sum identity.
pub const W_ALPHA25_PRINTED: &str = "1+225z^10+1250z^11+3825z^12+11525z^13+28050z^14\
+64005z^15+147075z^16+294975z^17+535075z^18+9111100z^19+1409205z^20+1999925z^21\
+2642200z^22+3219675z^23+3623325z^24+377243z^25+3621975z^26+3216050z^27+2643475z^28\
+2009175z^29+1408010z^30+904475z^31+535400z^32+292725z^33+147525z^34+68880z^35\
+27975z^36+9775z^37+3500z^38+1125z^39+375z^40+125z^41";

/// As printed: the `z^20` coefficient disagrees with its mirror at `z^40`.
pub const W_ALPHA30_PRINTED: &str = "1+4060z^12+24360z^14+294930z^16+1728400z^18\
+7758400z^20+26336640z^22+67403540z^24+129936240z^26+192974265z^28+220819632z^30\
+192974265z^32+129936240z^34+67403540z^36+26336640z^38+7758660z^40+1728400z^42\
+294930z^44+24360z^46+4060z^48+z^60";

pub const W_ALPHA15_1: &str =
    "1+450z^8+1848z^10+5040z^12+9045z^14+9045z^16+5040z^18+1848z^20+450z^22+z^30";

/// One reference instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: &'static str,
    pub alpha: GeneratorVector,
    /// Published minimum distance, when one was stated.
    pub expected_d: Option<usize>,
    /// Published weight enumerator, verbatim.
    pub enumerator: Option<&'static str>,
}

/// Every reference instance, in presentation order.
pub fn instances() -> Vec<Instance> {
    let inst = |name, alpha, expected_d, enumerator| Instance {
        name,
        alpha,
        expected_d,
        enumerator,
    };
    vec![
        inst("alpha17", alpha17(), None, None),
        inst("alpha19", alpha19(), Some(6), None),
        inst("alpha19'", alpha19_1(), Some(8), Some(W_ALPHA19_1)),
        inst("alpha19''", alpha19_2(), Some(8), Some(W_ALPHA19_2)),
        // enumerators equal to those of alpha19'' and alpha19' respectively
        inst("alpha19'''", alpha19_3(), Some(8), Some(W_ALPHA19_2)),
        inst("alpha19''''", alpha19_4(), Some(8), Some(W_ALPHA19_1)),
        inst("alpha25^1", alpha25_a(), None, None),
        inst("alpha25^2", alpha25_b(), None, None),
        inst("alpha25'", alpha25_1(), Some(10), Some(W_ALPHA25_PRINTED)),
        inst("alpha25''", alpha25_2(), Some(10), Some(W_ALPHA25_PRINTED)),
        inst("alpha30", alpha30(), Some(12), Some(W_ALPHA30_PRINTED)),
        inst("alpha15", alpha15(), None, None),
        inst("alpha15'", alpha15_1(), Some(8), Some(W_ALPHA15_1)),
    ]
}
