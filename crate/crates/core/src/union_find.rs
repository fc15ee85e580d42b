/// Disjoint sets whose root is chosen by the caller.
///
/// `absorb(survivor, absorbed)` always keeps `survivor` as the root, which is
/// what the elder rule needs: the root of a component is its oldest minimum.
/// Finds use path halving.
#[derive(Debug, Clone)]
pub struct ElderUnionFind {
    parent: Vec<usize>,
}

impl ElderUnionFind {
    pub fn new(n: usize) -> Self {
        ElderUnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            let grand = self.parent[self.parent[x]];
            self.parent[x] = grand;
            x = grand;
        }
        x
    }

    /// Attaches the set rooted at `absorbed` below the root `survivor`.
    /// Both arguments must be roots.
    pub fn absorb(&mut self, survivor: usize, absorbed: usize) {
        debug_assert_eq!(self.parent[survivor], survivor);
        debug_assert_eq!(self.parent[absorbed], absorbed);
        if survivor != absorbed {
            self.parent[absorbed] = survivor;
        }
    }

    /// Makes `x` (a fresh singleton) a member of the set rooted at `root`.
    pub fn attach(&mut self, x: usize, root: usize) {
        self.parent[x] = root;
    }
}
