"""Reference matrices and worked examples, typed in by hand."""

X2 = [[1, 1, 1], [0, 1, 1], [0, -1, 1]]
X3 = [[1, 1, 1, 1, 1], [0, 1, 0, 1, 3], [0, 0, 1, 1, 1], [0, 0, -1, 0, 2], [0, 0, 1, -1, 1]]
X4 = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4],
    [0, 0, 1, 1, 1, 1, 1, 0, 3, 1, 3],
    [0, 0, -1, 1, 1, 1, -1, 0, -1, 1, 3],
    [0, 0, 0, 0, 1, 1, 0, 0, 2, 2, 6],
    [0, 0, 0, 0, -1, 1, 0, 0, -2, 0, 6],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, -1, 0, -1, 1, 3],
    [0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 3],
    [0, 0, 0, 0, 0, 0, -1, 1, 1, -1, 1],
]
A2 = [[1, 0, 0], [0, 1, 1], [0, -1, 1]]
A3 = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 1, 1], [0, 0, -1, 0, 2], [0, 0, 1, -1, 1]]
B2 = [[1, 1, 1], [0, 1, 0], [0, 0, 1]]
B3 = [[1, 1, 1, 1, 1], [0, 1, 0, 1, 3], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
U2 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
U3 = [[1, 1, 1, 0, 0], [0, 1, 1, 1, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
U4 = [
    [1, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

B4 = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 4],
    [0, 0, 1, 0, 0, 0, 1, 0, 2, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 3],
    [0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 6],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
]

U17_DIAGRAM = ("2,8' | 8,2' | 9,16' | 10,13' | 11,7' | 12,6' | 14,10' | 15,3' | 17,1' | "
               "1,4,5',11' | 6,7,9',14' | 3,13,4',12' | 5,16,15',17'")
U17_TABLEAU = "{g}/{2},{7} ; {5b},{9e}/{13},{6d} ; {8fh}/{4ac}"
U17_RESULT = {
    "{9}/{8},{b} ; {ac},{fh}/{14},{67} ; {25g}/{3de}": 1,
    "{9}/{8},{b} ; {67},{fh}/{14},{ac} ; {25g}/{3de}": -1,
}
