# The word algebra over {d, y} and its Laurent-series character.
#
# Words multiply by a deformed shuffle recursion; the character sends a
# word to a Laurent series built from x(z) = exp(z)/(1 - exp(z)) and
# d/dz, and it turns the word product into the series product.

from dmzv import Word, character, multiplicativity_defect, word_product

u, v = Word.parse("dy"), Word.parse("dy")
print(f"{u} * {v} = {word_product(u, v)}")

phi_u = character(u, 6)
print(f"\ncharacter of {u} (through order 6):")
for degree, coeff in sorted(phi_u.coeffs.items()):
    print(f"  z^{degree}: {coeff}")

defect = multiplicativity_defect(u, v, 10)
print(f"\ncharacter(u*v) - character(u)*character(v) is zero: {defect.is_zero()}")

# The product is not commutative on raw words: the commutator below is a
# nonzero word sum, but the character kills it (it lies in the ideal the
# quotient algebra divides out).
a, b = Word.parse("dy"), Word.parse("ddy")
commutator = word_product(a, b) - word_product(b, a)
print(f"\n[{a}, {b}] = {commutator}")
print(f"its character image is zero: {character(commutator, 10).is_zero()}")
