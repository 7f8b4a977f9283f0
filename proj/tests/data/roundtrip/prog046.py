def f1(p2, p3, p4):
    t5 = [p2, (2 + 7)][1]
    t6 = [12, eval(input())][0]
    return ((17 + 3) + -4)
d7 = {5: (4 + 12), 7: 14, 9: (9 + 12)}
v8 = 8
b9 = eval(input())
d10 = {4: 13, 9: v8}
print(0)
