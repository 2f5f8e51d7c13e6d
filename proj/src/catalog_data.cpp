// Built-in minimal-vanishing-sum catalog. Generated by tools/gen_catalog;
// the same text ships as data/minimal_vansums.txt for the AMBIG_CATALOG
// override. Regenerate with: build/tools/gen_catalog > data/minimal_vansums.txt
namespace ambig::vansums {

extern const char kEmbeddedCatalogText[] = R"CATALOG(
# Minimal vanishing sums of unit roots, by length, up to rotation.
# Record: <length> <phase>... with phases in turns, canonical rotation.
# Generated by tools/gen_catalog (replacement closure, max length 12).
2 0 1/2
3 0 1/3 2/3
5 0 1/5 2/5 3/5 4/5
6 0 1/30 7/30 13/30 19/30 2/3
7 0 1/30 1/15 2/5 13/30 19/30 2/3
7 0 1/30 7/30 11/30 17/30 3/5 4/5
7 0 1/7 2/7 3/7 4/7 5/7 6/7
8 0 1/42 1/7 2/7 3/7 4/7 29/42 5/7
8 0 1/30 1/15 4/15 2/5 3/5 19/30 2/3
8 0 1/30 7/30 4/15 7/15 3/5 2/3 4/5
9 0 1/42 1/21 13/42 1/3 19/42 25/42 5/7 31/42
9 0 1/42 5/42 1/7 3/7 19/42 4/7 29/42 5/7
9 0 1/42 1/7 2/7 3/7 23/42 4/7 29/42 37/42
9 0 1/30 1/15 4/15 2/5 7/15 3/5 2/3 4/5
10 0 1/70 1/7 2/7 29/70 3/7 4/7 43/70 57/70 6/7
10 0 1/42 1/21 1/7 1/3 19/42 10/21 25/42 5/7 31/42
10 0 1/42 1/21 2/7 13/42 1/3 25/42 13/21 5/7 31/42
10 0 1/42 1/21 13/42 1/3 19/42 4/7 25/42 5/7 19/21
10 0 1/42 5/42 1/7 11/42 19/42 4/7 25/42 29/42 5/7
10 0 1/42 1/7 2/7 1/3 10/21 25/42 13/21 31/42 37/42
11 0 1/105 1/42 22/105 1/3 43/105 19/42 25/42 64/105 31/42 37/42
11 0 1/105 1/30 16/105 31/105 2/5 46/105 61/105 3/5 76/105 4/5
11 0 1/105 3/70 17/70 2/7 3/7 31/70 4/7 71/105 5/7 6/7
11 0 1/105 9/70 19/70 2/5 29/70 39/70 3/5 71/105 4/5 69/70
11 0 1/105 16/105 31/105 1/3 46/105 17/30 61/105 76/105 23/30 29/30
11 0 1/105 22/105 2/7 43/105 3/7 4/7 64/105 5/7 6/7 41/42
11 0 1/70 1/30 11/70 11/30 2/5 31/70 41/70 3/5 51/70 61/70
11 0 1/70 4/105 11/70 1/5 2/5 31/70 41/70 3/5 74/105 51/70
11 0 1/70 1/7 11/42 2/7 29/70 4/7 25/42 43/70 57/70 6/7
11 0 1/70 1/7 2/7 29/70 3/7 4/7 43/70 68/105 6/7 103/105
11 0 1/70 11/70 1/5 2/5 44/105 31/70 3/5 51/70 79/105 61/70
11 0 1/70 11/70 1/5 2/5 31/70 59/105 41/70 3/5 61/70 94/105
11 0 1/42 1/21 1/7 2/7 1/3 10/21 25/42 13/21 5/7 31/42
11 0 1/42 1/21 1/7 1/3 3/7 19/42 10/21 5/7 31/42 16/21
11 0 1/42 1/21 1/7 1/3 19/42 10/21 4/7 25/42 5/7 19/21
11 0 1/42 1/21 13/42 1/3 3/7 19/42 4/7 5/7 16/21 19/21
11 0 1/42 1/7 11/42 2/7 17/42 23/42 25/42 29/42 31/42 37/42
11 0 1/11 2/11 3/11 4/11 5/11 6/11 7/11 8/11 9/11 10/11
12 0 1/210 1/42 4/105 13/42 1/3 46/105 19/42 25/42 67/105 47/70 37/42
12 0 1/210 1/42 43/210 13/42 1/3 19/42 4/7 25/42 127/210 169/210 37/42
12 0 1/210 4/105 1/7 2/7 17/42 3/7 46/105 67/105 47/70 5/7 6/7
12 0 1/210 13/105 1/5 2/5 43/105 13/30 58/105 47/70 73/105 4/5 103/105
12 0 1/210 13/105 1/3 11/30 43/105 58/105 17/30 47/70 73/105 29/30 103/105
12 0 1/210 31/210 61/210 1/3 11/30 17/30 121/210 3/5 151/210 181/210 29/30
12 0 1/105 1/42 3/70 17/70 2/7 3/7 31/70 4/7 71/105 29/42 5/7
12 0 1/105 1/42 3/70 1/3 79/210 43/105 19/42 25/42 64/105 31/42 37/42
12 0 1/105 1/42 1/21 22/105 1/3 43/105 19/42 25/42 64/105 5/7 31/42
12 0 1/105 1/42 22/105 17/70 1/3 19/42 121/210 25/42 64/105 31/42 37/42
12 0 1/105 1/42 22/105 2/7 1/3 43/105 25/42 64/105 13/21 31/42 37/42
12 0 1/105 1/42 22/105 2/7 43/105 3/7 4/7 64/105 29/42 5/7 41/42
12 0 1/105 1/42 22/105 1/3 43/105 3/7 19/42 64/105 31/42 16/21 37/42
12 0 1/105 1/42 22/105 1/3 43/105 31/70 19/42 25/42 31/42 163/210 37/42
12 0 1/105 1/42 22/105 1/3 43/105 19/42 4/7 25/42 64/105 37/42 19/21
12 0 1/105 1/30 9/70 16/105 2/5 46/105 97/210 61/105 3/5 76/105 4/5
12 0 1/105 1/30 16/105 7/30 31/105 46/105 17/30 61/105 3/5 76/105 4/5
12 0 1/105 1/30 16/105 31/105 2/5 29/70 46/105 3/5 76/105 157/210 4/5
12 0 1/105 1/30 16/105 31/105 2/5 46/105 39/70 61/105 3/5 4/5 187/210
12 0 1/105 1/30 16/105 31/105 2/5 46/105 61/105 3/5 19/30 76/105 29/30
12 0 1/105 1/30 31/105 67/210 2/5 46/105 61/105 3/5 76/105 4/5 69/70
12 0 1/105 3/70 8/105 2/7 43/105 3/7 31/70 4/7 71/105 5/7 6/7
12 0 1/105 3/70 5/42 17/70 3/7 31/70 19/42 4/7 71/105 5/7 6/7
12 0 1/105 3/70 17/70 11/42 2/7 31/70 4/7 25/42 71/105 5/7 6/7
12 0 1/105 3/70 17/70 29/105 2/7 3/7 4/7 64/105 71/105 5/7 6/7
12 0 1/105 3/70 17/70 2/7 17/42 3/7 31/70 71/105 5/7 31/42 6/7
12 0 1/105 3/70 17/70 2/7 3/7 31/70 23/42 4/7 71/105 6/7 37/42
12 0 1/105 3/70 2/7 79/210 43/105 3/7 4/7 64/105 5/7 6/7 41/42
12 0 1/105 11/105 9/70 2/5 29/70 46/105 39/70 3/5 71/105 4/5 69/70
12 0 1/105 5/42 22/105 43/105 3/7 19/42 4/7 64/105 5/7 6/7 41/42
12 0 1/105 9/70 16/105 19/70 2/5 29/70 39/70 3/5 71/105 4/5 86/105
12 0 1/105 9/70 16/105 1/3 46/105 97/210 17/30 61/105 76/105 23/30 29/30
12 0 1/105 9/70 26/105 19/70 2/5 39/70 61/105 3/5 71/105 4/5 69/70
12 0 1/105 9/70 19/70 2/5 29/70 13/30 39/70 71/105 23/30 4/5 69/70
12 0 1/105 9/70 19/70 2/5 29/70 39/70 3/5 19/30 71/105 29/30 69/70
12 0 1/105 2/15 16/105 31/105 1/3 46/105 17/30 61/105 76/105 23/30 4/5
12 0 1/105 16/105 19/70 31/105 1/3 17/30 61/105 127/210 76/105 23/30 29/30
12 0 1/105 16/105 31/105 1/3 29/70 46/105 17/30 76/105 157/210 23/30 29/30
12 0 1/105 16/105 31/105 1/3 46/105 17/30 61/105 3/5 76/105 14/15 29/30
12 0 1/105 4/21 22/105 1/3 43/105 19/42 25/42 64/105 31/42 6/7 37/42
12 0 1/105 22/105 17/70 2/7 3/7 31/70 4/7 71/105 5/7 6/7 92/105
12 0 1/105 22/105 11/42 2/7 43/105 4/7 25/42 64/105 5/7 6/7 41/42
12 0 1/105 22/105 2/7 43/105 3/7 31/70 4/7 5/7 163/210 6/7 41/42
12 0 1/105 22/105 2/7 43/105 3/7 23/42 4/7 64/105 6/7 37/42 41/42
12 0 1/105 19/70 31/105 2/5 29/70 39/70 3/5 71/105 4/5 101/105 69/70
12 0 1/105 31/105 67/210 1/3 46/105 17/30 61/105 76/105 23/30 29/30 69/70
12 0 1/70 1/30 11/70 7/30 11/30 31/70 17/30 41/70 3/5 51/70 61/70
12 0 1/70 1/30 11/70 11/30 2/5 44/105 31/70 3/5 51/70 79/105 61/70
12 0 1/70 1/30 11/70 11/30 2/5 31/70 59/105 41/70 3/5 61/70 94/105
12 0 1/70 4/105 11/70 1/5 7/30 31/70 17/30 41/70 3/5 74/105 51/70
12 0 1/70 4/105 11/70 1/5 2/5 44/105 31/70 3/5 74/105 51/70 79/105
12 0 1/70 4/105 11/70 1/5 2/5 31/70 59/105 41/70 3/5 74/105 94/105
12 0 1/70 5/42 1/7 11/42 29/70 19/42 4/7 25/42 43/70 57/70 6/7
12 0 1/70 2/15 11/70 1/3 11/30 31/70 17/30 41/70 51/70 23/30 61/70
12 0 1/70 1/7 26/105 2/7 17/42 3/7 61/105 43/70 31/42 57/70 6/7
12 0 1/70 1/7 26/105 2/7 3/7 47/105 4/7 68/105 143/210 6/7 37/42
12 0 1/70 1/7 11/42 2/7 29/70 47/105 4/7 25/42 82/105 57/70 6/7
12 0 1/70 1/7 11/42 2/7 29/70 4/7 25/42 43/70 68/105 6/7 103/105
12 0 1/70 11/70 1/5 7/30 44/105 31/70 17/30 3/5 51/70 79/105 61/70
12 0 1/70 11/70 1/5 29/105 2/5 13/30 41/70 64/105 51/70 23/30 61/70
12 0 1/70 11/70 1/5 2/5 44/105 31/70 59/105 3/5 79/105 61/70 94/105
12 0 1/70 11/42 2/7 13/42 29/70 4/7 25/42 43/70 57/70 6/7 41/42
12 0 1/66 1/11 3/11 23/66 4/11 5/11 6/11 7/11 8/11 9/11 10/11
12 0 2/105 3/70 1/5 23/70 37/105 47/105 33/70 3/5 53/70 82/105 4/5
12 0 2/105 1/7 23/105 11/42 44/105 19/42 4/7 25/42 5/7 86/105 6/7
12 0 2/105 17/105 1/5 32/105 89/210 47/105 17/30 3/5 53/70 4/5 92/105
12 0 1/42 1/21 1/7 2/7 1/3 3/7 10/21 13/21 5/7 31/42 16/21
12 0 1/42 1/21 1/7 2/7 1/3 10/21 4/7 25/42 13/21 5/7 19/21
12 0 1/42 5/42 1/7 11/42 17/42 19/42 23/42 25/42 29/42 31/42 37/42
)CATALOG";

}  // namespace ambig::vansums
