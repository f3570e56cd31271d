//! Named worked instances with their expected embedding verdicts.

use std::sync::Arc;

use crate::action::{build_coset_extension, diagonal_embedding, induced_functor, EquivariantMap, GSet, TranslationGroupoid};
use crate::embedding::Condition;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::FiniteGroupoid;
use crate::morphism::GroupoidMorphism;
use crate::presentation::Presentation;

pub const FIXTURE_NAMES: [&str; 8] = [
    "s3",
    "double-cover",
    "teardrop-bad",
    "teardrop-good",
    "z6-over-z3",
    "diagonal-z2",
    "binary-dihedral",
    "diagonal-sheets",
];

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub morphism: GroupoidMorphism,
    /// Present when the domain is a translation groupoid.
    pub source: Option<TranslationGroupoid>,
    /// Present when the codomain is a translation groupoid.
    pub target: Option<TranslationGroupoid>,
    /// Equivariant map the instance is built from, if any.
    pub immersion: Option<EquivariantMap>,
    pub expected_verdict: bool,
    pub expected_failures: Vec<Condition>,
}

pub fn fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES.iter().map(|n| fixture(n).expect("built-in fixture")).collect()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    match name {
        "s3" => Ok(s3()),
        "double-cover" => Ok(double_cover()),
        "teardrop-bad" => Ok(teardrop_bad()),
        "teardrop-good" => Ok(teardrop_good()),
        "z6-over-z3" => Ok(z6_over_z3()),
        "diagonal-z2" => Ok(diagonal_z2()),
        "binary-dihedral" => binary_dihedral(),
        "diagonal-sheets" => diagonal_sheets(),
        other => Err(Error::Precondition(format!("no fixture named {other:?}"))),
    }
}

fn from_map(
    name: &'static str,
    description: &'static str,
    map: EquivariantMap,
    expected_verdict: bool,
    expected_failures: Vec<Condition>,
) -> Fixture {
    let (source, target, morphism) = induced_functor(&map);
    Fixture {
        name,
        description,
        morphism,
        source: Some(source),
        target: Some(target),
        immersion: Some(map),
        expected_verdict,
        expected_failures,
    }
}

/// `S3 ⋉ (S3/⟨(12)⟩) → S3 ⋉ pt`.
pub fn s3() -> Fixture {
    let g = FiniteGroup::symmetric(3);
    let h = g.generated_subgroup(&[g.element("213").expect("transposition")]);
    let n = GSet::cosets(&g, &h).expect("subgroup");
    let pt = GSet::trivial(g, &["pt"]);
    let map = EquivariantMap::new(n, pt, vec![0; 3]).expect("constant map");
    from_map("s3", "S3 acting on the three cosets of <(12)>, mapped to a point", map, true, vec![])
}

/// Two isolated points sent to the two points of a swapped pair.
pub fn double_cover() -> Fixture {
    let z2 = FiniteGroup::cyclic(2);
    let swap = GSet::new(z2, vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 0]]).expect("swap");
    let target = crate::action::translation_groupoid(&swap);
    let domain = Arc::new(FiniteGroupoid::discrete(&["p", "q"]));
    let morphism = GroupoidMorphism::new(
        domain,
        target.groupoid.clone(),
        vec![0, 1],
        vec![target.arrow(0, 0), target.arrow(0, 1)],
    )
    .expect("valid maps");
    let trivial = FiniteGroup::cyclic(2);
    let immersion = EquivariantMap::new(GSet::trivial(trivial.clone(), &["p", "q"]), GSet::trivial(trivial, &["m"]), vec![0, 0])
        .expect("constant map");
    Fixture {
        name: "double-cover",
        description: "two points onto one Z/2 orbit; the companion map folds two fixed points onto one",
        morphism,
        source: None,
        target: Some(target),
        immersion: Some(immersion),
        expected_verdict: false,
        expected_failures: vec![Condition::EssentialInjectivity],
    }
}

fn z3_point() -> TranslationGroupoid {
    crate::action::translation_groupoid(&GSet::trivial(FiniteGroup::cyclic(3), &["x"]))
}

/// One point with trivial isotropy over a point with isotropy Z/3.
pub fn teardrop_bad() -> Fixture {
    let target = z3_point();
    let domain = Arc::new(FiniteGroupoid::discrete(&["y"]));
    let morphism =
        GroupoidMorphism::new(domain, target.groupoid.clone(), vec![0], vec![target.arrow(0, 0)]).expect("valid maps");
    Fixture {
        name: "teardrop-bad",
        description: "a single sheet over the Z/3 cone point",
        morphism,
        source: None,
        target: Some(target),
        immersion: None,
        expected_verdict: false,
        expected_failures: vec![Condition::LocalModel],
    }
}

/// Three sheets permuted by Z/3 over the cone point.
pub fn teardrop_good() -> Fixture {
    let z3 = FiniteGroup::cyclic(3);
    let sheets = GSet::new(
        z3.clone(),
        vec!["y0".into(), "y1".into(), "y2".into()],
        z3.elements().map(|g| (0..3).map(|i| z3.mul(g, i)).collect()).collect(),
    )
    .expect("regular action");
    let map = EquivariantMap::new(sheets, GSet::trivial(z3, &["x"]), vec![0; 3]).expect("constant map");
    from_map("teardrop-good", "three sheets cyclically permuted over the Z/3 cone point", map, true, vec![])
}

/// Six sheets over the Z/3 point, acted on by Z/6 through reduction mod 3.
pub fn z6_over_z3() -> Fixture {
    let z6 = FiniteGroup::cyclic(6);
    let target = z3_point();
    let domain = crate::action::translation_groupoid(&GSet::new(
        z6.clone(),
        (0..6).map(|i| format!("y{i}")).collect(),
        z6.elements().map(|g| (0..6).map(|i| z6.mul(g, i)).collect()).collect(),
    )
    .expect("regular action"));
    let phi1 = domain.groupoid.arrows().map(|a| target.arrow(domain.decode(a).0 % 3, 0)).collect();
    let morphism =
        GroupoidMorphism::new(domain.groupoid.clone(), target.groupoid.clone(), vec![0; 6], phi1).expect("valid maps");
    Fixture {
        name: "z6-over-z3",
        description: "six sheets over the Z/3 cone point, Z/6 acting through Z/6 -> Z/3",
        morphism,
        source: Some(domain),
        target: Some(target),
        immersion: None,
        expected_verdict: false,
        expected_failures: vec![Condition::FiberTransitivity],
    }
}

fn swap_set() -> GSet {
    GSet::new(FiniteGroup::cyclic(2), vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 0]]).expect("swap")
}

/// The diagonal of `Z/2 ⋉ {a,b}` in its square.
pub fn diagonal_z2() -> Fixture {
    let d = diagonal_embedding(&swap_set());
    Fixture {
        name: "diagonal-z2",
        description: "diagonal of Z/2 swapping {a,b}, inside the square",
        morphism: d.morphism,
        source: Some(d.domain),
        target: Some(d.target),
        immersion: None,
        expected_verdict: true,
        expected_failures: vec![],
    }
}

/// The binary dihedral group of order 12 acting on the two cosets of `⟨a⟩`,
/// mapped to a fixed point.
pub fn binary_dihedral() -> Result<Fixture> {
    let g = binary_dihedral_group()?;
    let h = g.generated_subgroup(&[g.element("a")?]);
    let n = GSet::cosets_labelled(&g, &h, |r| format!("[{r},0]"))?;
    let m = GSet::trivial(g, &["0"]);
    let map = EquivariantMap::new(n, m, vec![0, 0])?;
    Ok(from_map(
        "binary-dihedral",
        "binary dihedral group of order 12 on the cosets of <a>, over a fixed point",
        map,
        true,
        vec![],
    ))
}

pub fn binary_dihedral_group() -> Result<FiniteGroup> {
    Presentation::parse(&["a", "b"], &["a^6 = b^4 = 1", "b a b^-1 = a^-1", "a^3 = b^2"])?.enumerate()
}

/// The diagonal of `{a,b}²` under `Z/2 × Z/2`, extended to its translates.
pub fn diagonal_sheets() -> Result<Fixture> {
    let square = swap_set().external_product(&swap_set());
    let diagonal = square.subset(&["(a,a)", "(b,b)"])?;
    let ext = build_coset_extension(&square, &diagonal)?;
    Ok(from_map(
        "diagonal-sheets",
        "translates of the diagonal in {a,b}^2 under Z/2 x Z/2, one sheet per coset of the diagonal subgroup",
        ext.map,
        true,
        vec![],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::is_orbifold_embedding;

    #[test]
    fn every_fixture_reproduces_its_verdict() {
        for f in fixtures() {
            assert!(f.morphism.domain.validate().is_valid(), "{}", f.name);
            assert!(f.morphism.validate_functor().is_valid(), "{}", f.name);
            let v = is_orbifold_embedding(&f.morphism).unwrap();
            assert_eq!(v.verdict, f.expected_verdict, "{}", f.name);
            assert_eq!(v.failed(), f.expected_failures, "{}", f.name);
        }
    }

    #[test]
    fn binary_dihedral_points() {
        let f = binary_dihedral().unwrap();
        assert_eq!(f.morphism.domain.object_labels(), ["[e,0]", "[b,0]"]);
        assert_eq!(f.immersion.unwrap().source.group().order(), 12);
    }

    #[test]
    fn unknown_fixture() {
        assert!(fixture("torus").is_err());
    }
}
