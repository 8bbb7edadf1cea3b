//! Maximum bipartite matching by repeated augmenting paths.

/// Matches left vertices `0..adjacency.len()` to right vertices
/// `0..right_count`. Returns, for each left vertex, its partner if matched.
///
/// Left vertices are tried in index order and neighbours in list order, so
/// the result is deterministic.
pub fn maximum_matching(adjacency: &[Vec<usize>], right_count: usize) -> Vec<Option<usize>> {
    let mut right_owner: Vec<Option<usize>> = vec![None; right_count];
    for left in 0..adjacency.len() {
        let mut visited = vec![false; right_count];
        augment(left, adjacency, &mut right_owner, &mut visited);
    }
    let mut partner = vec![None; adjacency.len()];
    for (right, owner) in right_owner.iter().enumerate() {
        if let Some(left) = owner {
            partner[*left] = Some(right);
        }
    }
    partner
}

fn augment(left: usize, adjacency: &[Vec<usize>], right_owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &right in &adjacency[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let free = match right_owner[right] {
            None => true,
            Some(other) => augment(other, adjacency, right_owner, visited),
        };
        if free {
            right_owner[right] = Some(left);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        assert!(maximum_matching(&[], 3).is_empty());
    }

    #[test]
    fn triangle_of_pairs_is_perfect() {
        // Buckets on region pairs (1,2), (1,3), (2,3) with regions 1..=3 as 0..=2.
        let adj = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        let m = maximum_matching(&adj, 3);
        assert!(m.iter().all(Option::is_some));
        let mut used: Vec<_> = m.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used.len(), 3);
    }

    #[test]
    fn augmenting_path_reassigns() {
        let adj = vec![vec![0], vec![0, 1], vec![1]];
        let m = maximum_matching(&adj, 2);
        assert_eq!(m.iter().filter(|x| x.is_some()).count(), 2);
        let adj = vec![vec![0, 1], vec![0]];
        assert_eq!(maximum_matching(&adj, 2), vec![Some(1), Some(0)]);
    }
}
