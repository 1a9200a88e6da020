use super::TranslateError;
use crate::formula::Formula;
use crate::sequent::{check_sequent_proof, exp0_from_exp1, weaken_to, CalculusId, RuleId, SequentProof};

/// Replace every `EXP0` leaf of a GB proof by its GLET_J derivation from
/// `EXP1`, weakened to the leaf's sequent. Other nodes are kept.
pub fn port_gb_to_gletj(p: &SequentProof) -> Result<SequentProof, TranslateError> {
    check_sequent_proof(CalculusId::GB, p)?;
    Ok(port(p))
}

fn port(p: &SequentProof) -> SequentProof {
    if p.rule == RuleId::Exp0 {
        let Some(Formula::Circ(a)) = &p.principal else {
            unreachable!("checked EXP0 leaf");
        };
        return weaken_to(exp0_from_exp1(a), &p.sequent, CalculusId::GLETJ)
            .expect("EXP0 leaf contains @A, ~A, A");
    }
    SequentProof {
        sequent: p.sequent.clone(),
        rule: p.rule,
        principal: p.principal.clone(),
        premises: p.premises.iter().map(port).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Language};
    use crate::sequent::{circ_conjunction_gb_with_cuts, Sequent};

    fn f(s: &str) -> Formula {
        parse(s, Language::LJ).unwrap()
    }

    #[test]
    fn single_leaf() {
        let leaf = SequentProof::exp0(f("@p"), Default::default(), [f("q")].into()).unwrap();
        let out = port_gb_to_gletj(&leaf).unwrap();
        assert!(check_sequent_proof(CalculusId::GLETJ, &out).is_ok());
        assert_eq!(out.sequent, Sequent::new([f("@p"), f("p"), f("~p")], [f("q")]));
        assert_eq!(out.height(), 4);
        assert_eq!(out.rule, RuleId::RW);
    }

    #[test]
    fn exp0_free_unchanged() {
        let p = SequentProof::id(f("p"));
        assert_eq!(port_gb_to_gletj(&p).unwrap(), p);
    }

    #[test]
    fn remark_proof() {
        let gb = circ_conjunction_gb_with_cuts();
        let out = port_gb_to_gletj(&gb).unwrap();
        assert!(check_sequent_proof(CalculusId::GLETJ, &out).is_ok());
        assert_eq!(out.sequent, gb.sequent);
        assert_eq!(out.count_rule(|r| r == RuleId::Exp0), 0);
    }
}
