def f1(p2, p3, p4):
    t5 = ((p4 if True else 19) + -p4)
    t6 = (p4 + [0, p3][0])
    t7 = t5
    return -t7
def f8(p9, p10):
    t11 = f1((18 if False else p9), (p10 + p9), eval(input()))
    t12 = -9
    return 14
print(-(-2))
print(not not False)
l13 = [(20 + 18), -2, (18 + 2), (13 + 0)]
f8([5, 1][1], (9 + 19))
print((15 + (20 + 5)))
