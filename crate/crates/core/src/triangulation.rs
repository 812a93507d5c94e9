//! Flag-decorated ideal triangulations: internal (cross-ratio) relations,
//! gluing equations, forbidden polynomials, and the two-tetrahedron
//! figure-eight dataset.

use crate::arith::Rat;
use crate::poly::{Poly, QPoly, Vars};
use std::fmt;

/// Orientation convention: at vertex i the opposite vertices carry the cyclic
/// order (j, k, l) where (i, j, k, l) is an even permutation of (1, 2, 3, 4),
/// started at the designated vertex swap(i) with swap = (12)(34).
const VERTEX_TRIPLES: [(u8, u8, u8); 4] = [(2, 3, 4), (1, 4, 3), (4, 1, 2), (3, 2, 1)];

fn tet_prefix(index: usize) -> String {
    match index {
        0 => "u".into(),
        1 => "v".into(),
        2 => "w".into(),
        n => format!("z{n}"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagTetrahedron {
    pub id: usize,
}

impl FlagTetrahedron {
    pub fn prefix(&self) -> String {
        tet_prefix(self.id)
    }

    pub fn edge_var(&self, i: u8, j: u8) -> String {
        debug_assert!(i != j && (1..=4).contains(&i) && (1..=4).contains(&j));
        format!("{}{}{}", self.prefix(), i, j)
    }
}

/// Directed half-edge of one tetrahedron.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirEdge {
    pub tet: usize,
    pub from: u8,
    pub to: u8,
}

impl DirEdge {
    pub fn reversed(&self) -> DirEdge {
        DirEdge { tet: self.tet, from: self.to, to: self.from }
    }
}

/// One face pairing: the sorted face vertices of `tet` map through `image`
/// (parallel arrays) onto the other tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glue {
    pub tet: usize,
    pub face: [u8; 3],
    pub other: usize,
    pub other_face: [u8; 3],
    pub image: [u8; 3],
}

impl Glue {
    fn map(&self, v: u8) -> Option<u8> {
        self.face.iter().position(|&x| x == v).map(|k| self.image[k])
    }
    fn unmap(&self, v: u8) -> Option<u8> {
        self.image.iter().position(|&x| x == v).map(|k| self.face[k])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub tets: Vec<FlagTetrahedron>,
    pub glues: Vec<Glue>,
    /// Forward edge classes in discovery order; each class is one direction
    /// of a cycle of identified half-edges.
    pub edge_classes: Vec<Vec<DirEdge>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TriangulationError {
    Parse { line: usize, message: String },
    Validation(String),
}

impl fmt::Display for TriangulationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangulationError::Parse { line, message } => {
                write!(f, "parse error at line {line}: {message}")
            }
            TriangulationError::Validation(m) => write!(f, "invalid triangulation: {m}"),
        }
    }
}

impl std::error::Error for TriangulationError {}

impl Triangulation {
    pub fn new(tet_ids: Vec<usize>, glues: Vec<Glue>) -> Result<Self, TriangulationError> {
        let tets: Vec<FlagTetrahedron> = tet_ids.iter().map(|&id| FlagTetrahedron { id }).collect();
        let mut t = Triangulation { tets, glues, edge_classes: vec![] };
        t.validate_faces()?;
        t.edge_classes = t.compute_edge_classes()?;
        Ok(t)
    }

    fn tet_index(&self, id: usize) -> Option<usize> {
        self.tets.iter().position(|t| t.id == id)
    }

    fn validate_faces(&self) -> Result<(), TriangulationError> {
        let faces: [[u8; 3]; 4] = [[2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]];
        let mut seen: Vec<(usize, [u8; 3])> = vec![];
        for g in &self.glues {
            for &(tet, face) in &[(g.tet, g.face), (g.other, g.other_face)] {
                if self.tet_index(tet).is_none() {
                    return Err(TriangulationError::Validation(format!(
                        "glue references undeclared tetrahedron {tet}"
                    )));
                }
                let mut f = face;
                f.sort_unstable();
                if !faces.contains(&f) {
                    return Err(TriangulationError::Validation(format!(
                        "face {face:?} of tetrahedron {tet} is not a vertex triple"
                    )));
                }
                if seen.contains(&(tet, f)) {
                    return Err(TriangulationError::Validation(format!(
                        "face {face:?} of tetrahedron {tet} glued twice"
                    )));
                }
                seen.push((tet, f));
            }
            let mut img = g.image;
            img.sort_unstable();
            let mut of = g.other_face;
            of.sort_unstable();
            if img != of {
                return Err(TriangulationError::Validation(format!(
                    "permutation {:?} does not map onto face {:?}",
                    g.image, g.other_face
                )));
            }
        }
        let expected = 4 * self.tets.len();
        if seen.len() != expected {
            return Err(TriangulationError::Validation(format!(
                "{} of {} faces glued; every face must be paired exactly once",
                seen.len(),
                expected
            )));
        }
        Ok(())
    }

    /// Identifications of directed edges induced by a glue record.
    fn identify(&self, e: &DirEdge) -> Vec<DirEdge> {
        let mut out = vec![];
        for g in &self.glues {
            if g.tet == e.tet {
                if let (Some(a), Some(b)) = (g.map(e.from), g.map(e.to)) {
                    out.push(DirEdge { tet: g.other, from: a, to: b });
                }
            }
            if g.other == e.tet {
                if let (Some(a), Some(b)) = (g.unmap(e.from), g.unmap(e.to)) {
                    out.push(DirEdge { tet: g.tet, from: a, to: b });
                }
            }
        }
        out
    }

    /// Edge classes discovered by scanning glue records in declaration order
    /// and walking each new directed edge's orbit.
    fn compute_edge_classes(&self) -> Result<Vec<Vec<DirEdge>>, TriangulationError> {
        let mut classes: Vec<Vec<DirEdge>> = vec![];
        let mut assigned: std::collections::HashSet<DirEdge> = Default::default();
        let mut seeds: Vec<DirEdge> = vec![];
        for g in &self.glues {
            let f = {
                let mut f = g.face;
                f.sort_unstable();
                f
            };
            for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                seeds.push(DirEdge { tet: g.tet, from: a, to: b });
            }
        }
        // also seed from raw tets in case a triangulation leaves an edge
        // untouched by any glue (caught as open class below)
        for (ti, _) in self.tets.iter().enumerate() {
            for a in 1..=4u8 {
                for b in a + 1..=4u8 {
                    seeds.push(DirEdge { tet: ti, from: a, to: b });
                }
            }
        }
        for seed in seeds {
            if assigned.contains(&seed) {
                continue;
            }
            let mut orbit = vec![seed];
            let mut queue = vec![seed];
            assigned.insert(seed);
            assigned.insert(seed.reversed());
            while let Some(e) = queue.pop() {
                for n in self.identify(&e) {
                    if !assigned.contains(&n) {
                        assigned.insert(n);
                        assigned.insert(n.reversed());
                        orbit.push(n);
                        queue.push(n);
                    }
                }
            }
            if orbit.len() < 2 && !self.glues.is_empty() {
                return Err(TriangulationError::Validation(format!(
                    "open edge class at tetrahedron {} edge {}->{}",
                    seed.tet, seed.from, seed.to
                )));
            }
            classes.push(orbit);
        }
        let total: usize = classes.iter().map(|c| 2 * c.len()).sum();
        if total != 12 * self.tets.len() {
            return Err(TriangulationError::Validation(format!(
                "edge classes cover {total} of {} directed edges",
                12 * self.tets.len()
            )));
        }
        Ok(classes)
    }

    /// Variable list: all half-edge coordinates sorted by name.
    pub fn variables(&self) -> Vars {
        let mut names = vec![];
        for t in &self.tets {
            for i in 1..=4u8 {
                for j in 1..=4u8 {
                    if i != j {
                        names.push(t.edge_var(i, j));
                    }
                }
            }
        }
        names.sort();
        Vars::new(names)
    }

    pub fn serialize_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tets {
            out.push_str(&format!("tet {}\n", t.id));
        }
        for g in &self.glues {
            out.push_str(&format!(
                "glue {}/{}{}{} {}/{}{}{} {}{}{}\n",
                g.tet, g.face[0], g.face[1], g.face[2],
                g.other, g.other_face[0], g.other_face[1], g.other_face[2],
                g.image[0], g.image[1], g.image[2]
            ));
        }
        out
    }
}

/// Cross-ratio relations of one tetrahedron: two per vertex, eight in total,
/// ordered by vertex and, within a vertex, by leading monomial.
pub fn internal_relations(tet: &FlagTetrahedron, vars: &Vars) -> Vec<QPoly> {
    let mut out = vec![];
    for i in 1..=4u8 {
        let (j, k, l) = VERTEX_TRIPLES[(i - 1) as usize];
        let z = |a: u8, b: u8| Poly::var(vars, &tet.edge_var(a, b));
        let one = Poly::one(vars);
        // z_ij z_ik - z_ik + 1   (from z_ik (1 - z_ij) = 1)
        let r1 = z(i, j).mul(&z(i, k)).sub(&z(i, k)).add(&one);
        // z_ij z_il - z_ij + 1   (from z_ij (1 - z_il) = 1)
        let r2 = z(i, j).mul(&z(i, l)).sub(&z(i, j)).add(&one);
        let mut pair = [r1, r2];
        pair.sort_by(|a, b| {
            let oa = a.leading_term(&crate::poly::MonomialOrder::DegLex).unwrap().0.clone();
            let ob = b.leading_term(&crate::poly::MonomialOrder::DegLex).unwrap().0.clone();
            crate::poly::MonomialOrder::DegLex.cmp(&ob, &oa)
        });
        out.extend(pair);
    }
    out
}

/// Edge and face gluing equations (L_e, L_f) in the fixed dataset order.
pub fn gluing_equations(t: &Triangulation, vars: &Vars) -> (Vec<QPoly>, Vec<QPoly>) {
    let one = Poly::one(vars);
    let mut le = vec![];
    for class in &t.edge_classes {
        for dir in [false, true] {
            let mut prod = Poly::one(vars);
            for e in class {
                let e = if dir { e.reversed() } else { *e };
                let name = t.tets[e.tet].edge_var(e.from, e.to);
                prod = prod.mul(&Poly::var(vars, &name));
            }
            le.push(prod.sub(&one));
        }
    }
    let mut lf = vec![];
    for g in &t.glues {
        let mut prod = Poly::one(vars);
        for &(tet, face) in &[(g.tet, g.face), (g.other, g.other_face)] {
            let opp = (1..=4u8).find(|v| !face.contains(v)).unwrap();
            for &v in &face {
                let name = t.tets[tet].edge_var(v, opp);
                prod = prod.mul(&Poly::var(vars, &name));
            }
        }
        lf.push(prod.sub(&one));
    }
    (le, lf)
}

/// F_D = { z, z - 1 : z in Z }.
pub fn forbidden_polys(vars: &Vars) -> Vec<QPoly> {
    assert!(!vars.is_empty(), "empty variable list");
    let one = Poly::one(vars);
    let mut out = vec![];
    for name in vars.names() {
        let z = Poly::var(vars, name);
        out.push(z.clone());
        out.push(z.sub(&one));
    }
    out
}

/// The gluing ideal data: variables, relation families, forbidden list.
#[derive(Clone, Debug)]
pub struct EquationSystem {
    pub vars: Vars,
    pub lc: Vec<QPoly>,
    pub le: Vec<QPoly>,
    pub lf: Vec<QPoly>,
    pub forbidden: Vec<QPoly>,
}

impl EquationSystem {
    pub fn generators(&self) -> Vec<QPoly> {
        let mut all = self.lc.clone();
        all.extend(self.le.clone());
        all.extend(self.lf.clone());
        all
    }

    pub fn from_triangulation(t: &Triangulation) -> Self {
        let vars = t.variables();
        let mut lc = vec![];
        for tet in &t.tets {
            lc.extend(internal_relations(tet, &vars));
        }
        let (le, lf) = gluing_equations(t, &vars);
        let forbidden = forbidden_polys(&vars);
        EquationSystem { vars, lc, le, lf, forbidden }
    }
}

/// The standard two-tetrahedron figure-eight triangulation. The face pairings
/// and vertex correspondences are fixed so that the generated equation system
/// reproduces the published gluing equations verbatim.
pub fn figure8() -> (Triangulation, EquationSystem) {
    let glues = vec![
        Glue { tet: 0, face: [2, 3, 4], other: 1, other_face: [2, 3, 4], image: [2, 4, 3] },
        Glue { tet: 0, face: [1, 3, 4], other: 1, other_face: [1, 2, 4], image: [2, 4, 1] },
        Glue { tet: 0, face: [1, 2, 4], other: 1, other_face: [1, 3, 4], image: [3, 4, 1] },
        Glue { tet: 0, face: [1, 2, 3], other: 1, other_face: [1, 2, 3], image: [3, 2, 1] },
    ];
    let t = Triangulation::new(vec![0, 1], glues).expect("builtin dataset is valid");
    let sys = EquationSystem::from_triangulation(&t);
    (t, sys)
}

/// The builtin dataset in the external file format.
pub fn figure8_file() -> String {
    let (t, _) = figure8();
    let mut out = String::from("# figure-eight knot complement, two ideal tetrahedra\n");
    out.push_str(&t.serialize_text());
    out
}

/// Parse the line-oriented triangulation format:
/// `tet <id>`, `glue <id>/<face> <id'>/<face'> <perm>`, `#` comments.
pub fn load_triangulation(text: &str) -> Result<Triangulation, TriangulationError> {
    let mut tets: Vec<usize> = vec![];
    let mut glues: Vec<Glue> = vec![];
    let mut any = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = ln + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        any = true;
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("tet") => {
                let id: usize = parts
                    .next()
                    .ok_or_else(|| TriangulationError::Parse {
                        line: lineno,
                        message: "tet requires an id".into(),
                    })?
                    .parse()
                    .map_err(|_| TriangulationError::Parse {
                        line: lineno,
                        message: "invalid tet id".into(),
                    })?;
                if tets.contains(&id) {
                    return Err(TriangulationError::Parse {
                        line: lineno,
                        message: format!("duplicate tet {id}"),
                    });
                }
                tets.push(id);
            }
            Some("glue") => {
                let parse_side = |s: &str| -> Result<(usize, [u8; 3]), TriangulationError> {
                    let (id, face) = s.split_once('/').ok_or_else(|| TriangulationError::Parse {
                        line: lineno,
                        message: "expected <id>/<face>".into(),
                    })?;
                    let id: usize = id.parse().map_err(|_| TriangulationError::Parse {
                        line: lineno,
                        message: "invalid tet id in glue".into(),
                    })?;
                    let digits: Vec<u8> = face
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as u8))
                        .collect::<Option<Vec<u8>>>()
                        .ok_or_else(|| TriangulationError::Parse {
                            line: lineno,
                            message: "face must be three digits".into(),
                        })?;
                    if digits.len() != 3 || digits.iter().any(|&d| !(1..=4).contains(&d)) {
                        return Err(TriangulationError::Parse {
                            line: lineno,
                            message: "face must name three vertices in 1..4".into(),
                        });
                    }
                    Ok((id, [digits[0], digits[1], digits[2]]))
                };
                let a = parts.next().ok_or_else(|| TriangulationError::Parse {
                    line: lineno,
                    message: "glue requires two sides".into(),
                })?;
                let b = parts.next().ok_or_else(|| TriangulationError::Parse {
                    line: lineno,
                    message: "glue requires two sides".into(),
                })?;
                let perm = parts.next().ok_or_else(|| TriangulationError::Parse {
                    line: lineno,
                    message: "glue requires a 3-letter vertex correspondence".into(),
                })?;
                let (tet, face) = parse_side(a)?;
                let (other, other_face) = parse_side(b)?;
                let digits: Vec<u8> = perm
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<Vec<u8>>>()
                    .ok_or_else(|| TriangulationError::Parse {
                        line: lineno,
                        message: "perm must be three digits".into(),
                    })?;
                if digits.len() != 3 {
                    return Err(TriangulationError::Parse {
                        line: lineno,
                        message: "perm must be three digits".into(),
                    });
                }
                glues.push(Glue {
                    tet,
                    face,
                    other,
                    other_face,
                    image: [digits[0], digits[1], digits[2]],
                });
            }
            Some(other) => {
                return Err(TriangulationError::Parse {
                    line: lineno,
                    message: format!("unknown directive '{other}'"),
                })
            }
            None => unreachable!(),
        }
    }
    if !any {
        return Err(TriangulationError::Parse { line: 0, message: "empty file".into() });
    }
    Triangulation::new(tets, glues).map_err(|e| e)
}

/// Numeric sanity at an exact point: all internal relations hold and no
/// coordinate is near {0, 1}.
pub fn coordinates_avoid_forbidden(point: &[Rat]) -> bool {
    point.iter().all(|x| {
        let d0 = x.clone();
        let d1 = x - crate::arith::rat_int(1);
        !d0.is_integer() && !d1.is_integer()
            || (d0 != Rat::from_integer(0.into()) && d1 != Rat::from_integer(0.into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig8_counts() {
        let (t, sys) = figure8();
        assert_eq!(t.tets.len(), 2);
        assert_eq!(t.edge_classes.len(), 2);
        assert_eq!(sys.lc.len(), 16);
        assert_eq!(sys.le.len(), 4);
        assert_eq!(sys.lf.len(), 4);
        assert_eq!(sys.vars.len(), 24);
        assert_eq!(sys.forbidden.len(), 48);
    }

    #[test]
    fn fig8_rows_match_published_text() {
        let (_, sys) = figure8();
        let s = |p: &QPoly| p.to_string();
        assert_eq!(s(&sys.lc[0]), "u12*u13 - u13 + 1");
        assert_eq!(s(&sys.lc[1]), "u12*u14 - u12 + 1");
        assert_eq!(s(&sys.lc[2]), "u21*u23 - u21 + 1");
        assert_eq!(s(&sys.lc[3]), "u21*u24 - u24 + 1");
        assert_eq!(s(&sys.lc[4]), "u31*u34 - u31 + 1");
        assert_eq!(s(&sys.lc[5]), "u32*u34 - u34 + 1");
        assert_eq!(s(&sys.lc[6]), "u41*u43 - u43 + 1");
        assert_eq!(s(&sys.lc[7]), "u42*u43 - u42 + 1");
        assert_eq!(s(&sys.lc[14]), "v41*v43 - v43 + 1");
        assert_eq!(s(&sys.lc[15]), "v42*v43 - v42 + 1");
        assert_eq!(s(&sys.le[0]), "u13*u14*u23*v21*v24*v31 - 1");
        assert_eq!(s(&sys.le[1]), "u31*u32*u41*v12*v13*v42 - 1");
        assert_eq!(s(&sys.le[2]), "u21*u24*u34*v23*v41*v43 - 1");
        assert_eq!(s(&sys.le[3]), "u12*u42*u43*v14*v32*v34 - 1");
        assert_eq!(s(&sys.lf[0]), "u21*u31*u41*v21*v31*v41 - 1");
        assert_eq!(s(&sys.lf[1]), "u12*u32*u42*v13*v23*v43 - 1");
        assert_eq!(s(&sys.lf[2]), "u13*u23*u43*v12*v32*v42 - 1");
        assert_eq!(s(&sys.lf[3]), "u14*u24*u34*v14*v24*v34 - 1");
    }

    #[test]
    fn fig8_file_roundtrip() {
        let (t, _) = figure8();
        let text = figure8_file();
        let loaded = load_triangulation(&text).unwrap();
        assert_eq!(loaded, t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            load_triangulation(""),
            Err(TriangulationError::Parse { .. })
        ));
        // one unpaired face: only 3 glue records
        let text = "tet 0\ntet 1\nglue 0/234 1/234 243\nglue 0/134 1/124 241\nglue 0/124 1/134 341\n";
        assert!(matches!(
            load_triangulation(text),
            Err(TriangulationError::Validation(_))
        ));
    }

    #[test]
    fn forbidden_examples() {
        let vars = Vars::new(vec!["x"]);
        let f = forbidden_polys(&vars);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].to_string(), "x");
        assert_eq!(f[1].to_string(), "x - 1");
    }

    #[test]
    fn parse_roundtrip_idempotent() {
        let (_, sys) = figure8();
        for g in sys.generators() {
            let printed = g.to_string();
            let back = crate::poly::parse::poly_parse(&printed, &sys.vars).unwrap();
            assert_eq!(back, g);
        }
    }
}
