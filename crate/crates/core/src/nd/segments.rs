use super::Deduction;
use crate::formula::Formula;

/// A chain of occurrences of one formula threaded downward through minor
/// premises of del-rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// Occurrences from top (`A_1`) to bottom (`A_n`), as node paths.
    pub path: Vec<Vec<usize>>,
    pub formula: Formula,
    pub length: usize,
    pub is_maximal: bool,
    pub cutrank: usize,
}

impl Segment {
    pub fn top(&self) -> &[usize] {
        &self.path[0]
    }

    pub fn bottom(&self) -> &[usize] {
        &self.path[self.length - 1]
    }

    /// Path of the elimination whose major premise ends the segment.
    pub fn elim_site(&self) -> Option<&[usize]> {
        self.is_maximal.then(|| {
            let b = self.bottom();
            &b[..b.len() - 1]
        })
    }
}

/// `(n, m)`: the cutrank and the summed length of the critical cuts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalizationMeasure {
    pub n: usize,
    pub m: usize,
}

fn is_minor(d: &Deduction, path: &[usize]) -> bool {
    let Some((&last, parent)) = path.split_last() else {
        return false;
    };
    d.at(parent)
        .and_then(|p| p.rule())
        .is_some_and(|r| r.minor_premises().contains(&last))
}

fn is_major_of_elim(d: &Deduction, path: &[usize]) -> bool {
    let Some((&last, parent)) = path.split_last() else {
        return false;
    };
    last == 0 && d.at(parent).and_then(|p| p.rule()).is_some_and(|r| r.is_elim())
}

fn chains(at: &Deduction, path: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
    match at.rule() {
        Some(r) if r.is_del() => {
            for &i in r.minor_premises() {
                path.push(i);
                let mut sub = Vec::new();
                chains(&at.premises()[i], path, &mut sub);
                path.pop();
                for mut c in sub {
                    c.push(path.clone());
                    out.push(c);
                }
            }
        }
        _ => out.push(vec![path.clone()]),
    }
}

/// Every segment of `d`, in pre-order of their bottom occurrence and then
/// left to right.
pub fn find_segments(d: &Deduction) -> Vec<Segment> {
    let mut bottoms = Vec::new();
    d.visit(&mut |path, _| {
        if !is_minor(d, path) {
            bottoms.push(path.to_vec());
        }
    });
    let mut out = Vec::new();
    for b in bottoms {
        let node = d.at(&b).expect("visited path");
        let mut cs = Vec::new();
        chains(node, &mut b.clone(), &mut cs);
        let major = is_major_of_elim(d, &b);
        for path in cs {
            let length = path.len();
            let top_rule = d.at(&path[0]).and_then(|t| t.rule());
            let is_maximal = major
                && (length > 1 || top_rule.is_some_and(|r| r.is_intro() || r.is_explosion()));
            let formula = node.formula().clone();
            out.push(Segment {
                cutrank: formula.complexity(),
                formula,
                length,
                is_maximal,
                path,
            });
        }
    }
    out
}

/// Maximum cutrank over the maximal segments; zero when there are none.
pub fn cutrank(d: &Deduction) -> usize {
    find_segments(d)
        .iter()
        .filter(|s| s.is_maximal)
        .map(|s| s.cutrank)
        .max()
        .unwrap_or(0)
}

pub fn measure(d: &Deduction) -> NormalizationMeasure {
    measure_of(&find_segments(d))
}

pub(crate) fn measure_of(segs: &[Segment]) -> NormalizationMeasure {
    let n = segs
        .iter()
        .filter(|s| s.is_maximal)
        .map(|s| s.cutrank)
        .max()
        .unwrap_or(0);
    let m = segs
        .iter()
        .filter(|s| s.is_maximal && s.cutrank == n)
        .map(|s| s.length)
        .sum();
    NormalizationMeasure { n, m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::nd::NdRule;

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn and_detour() {
        let d = Deduction::infer(
            NdRule::AndE1,
            f("p"),
            vec![Deduction::infer(
                NdRule::AndI,
                f("p & q"),
                vec![Deduction::open(f("p")), Deduction::open(f("q"))],
            )],
        );
        let cuts: Vec<_> = find_segments(&d).into_iter().filter(|s| s.is_maximal).collect();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].length, 1);
        assert_eq!(cuts[0].cutrank, 1);
        assert_eq!(cuts[0].elim_site(), Some(&[][..]));
    }

    #[test]
    fn segment_through_or_elimination() {
        let pq = f("p & q");
        let or = Deduction::infer_discharging(
            NdRule::OrE,
            pq.clone(),
            vec![
                Deduction::open(f("r | r")),
                Deduction::open(pq.clone()),
                Deduction::open(pq.clone()),
            ],
            vec!["u".into(), "v".into()],
        );
        let d = Deduction::infer(NdRule::AndE1, f("p"), vec![or]);
        let cuts: Vec<_> = find_segments(&d).into_iter().filter(|s| s.is_maximal).collect();
        assert_eq!(cuts.len(), 2);
        assert!(cuts.iter().all(|s| s.length == 2));
        assert_eq!(measure(&d), NormalizationMeasure { n: 1, m: 4 });
    }

    #[test]
    fn assumption_is_normal() {
        let d = Deduction::open(f("p"));
        assert!(find_segments(&d).iter().all(|s| !s.is_maximal));
        assert_eq!(cutrank(&d), 0);
    }
}
