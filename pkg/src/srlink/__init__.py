"""Stanley-Reisner theory and basic double G-links of monomial ideals."""
