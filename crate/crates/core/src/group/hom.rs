use std::collections::HashMap;
use std::sync::Arc;

use super::finite::{FiniteGroup, Subgroup};
use super::perm::Perm;
use crate::error::{Error, Result};

/// Largest domain order for which homomorphisms are tabulated.
pub const HOM_DOMAIN_LIMIT: u64 = 1 << 18;

/// A homomorphism given by the images of the domain generators.
///
/// Construction walks the Cayley graph of the domain and checks that every
/// edge is respected, which is equivalent to the full product check. The
/// resulting element table is kept for evaluation.
#[derive(Clone, Debug)]
pub struct GroupHomomorphism {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Vec<Perm>,
    table: Arc<HashMap<Perm, Perm>>,
}

impl GroupHomomorphism {
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, images: Vec<Perm>) -> Result<Self> {
        if images.len() != domain.generators().len() {
            return Err(Error::NotHomomorphism(format!(
                "{} images for {} generators",
                images.len(),
                domain.generators().len()
            )));
        }
        for im in &images {
            if !codomain.contains(im) {
                return Err(Error::NotHomomorphism(format!("image {im} is not in the codomain")));
            }
        }
        if domain.order() > HOM_DOMAIN_LIMIT {
            return Err(Error::BoundExceeded {
                what: "homomorphism domain".into(),
                order: domain.order(),
                bound: HOM_DOMAIN_LIMIT,
            });
        }
        let tree = domain.bfs_tree();
        let mut table: HashMap<Perm, Perm> = HashMap::with_capacity(tree.len());
        let mut tree_images: Vec<Perm> = Vec::with_capacity(tree.len());
        for (g, parent) in &tree {
            let im = match parent {
                None => codomain.identity(),
                Some((pi, gi)) => tree_images[*pi].mul(&images[*gi]),
            };
            table.insert(g.clone(), im.clone());
            tree_images.push(im);
        }
        // Every Cayley-graph edge must be respected.
        for (g, im) in tree.iter().map(|(g, _)| g).zip(&tree_images) {
            for (gi, s) in domain.generators().iter().enumerate() {
                let target = &table[&g.mul(s)];
                if *target != im.mul(&images[gi]) {
                    return Err(Error::NotHomomorphism(format!(
                        "edge {g} * {s} is not respected"
                    )));
                }
            }
        }
        Ok(GroupHomomorphism {
            domain,
            codomain,
            images,
            table: Arc::new(table),
        })
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn generator_images(&self) -> &[Perm] {
        &self.images
    }

    pub fn apply(&self, g: &Perm) -> Result<Perm> {
        self.table
            .get(g)
            .cloned()
            .ok_or_else(|| Error::NotMember(g.to_string()))
    }

    pub fn image(&self) -> Subgroup {
        self.codomain
            .subgroup(&self.images)
            .expect("images are codomain members")
    }

    pub fn kernel(&self) -> Subgroup {
        let k: Vec<Perm> = self
            .table
            .iter()
            .filter(|(_, im)| im.is_identity())
            .map(|(g, _)| g.clone())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        self.domain.normal_closure(&k).expect("kernel elements are members")
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupHomomorphism) -> Result<GroupHomomorphism> {
        let images = self
            .images
            .iter()
            .map(|im| other.apply(im))
            .collect::<Result<Vec<_>>>()?;
        GroupHomomorphism::new(self.domain.clone(), other.codomain.clone(), images)
    }
}
