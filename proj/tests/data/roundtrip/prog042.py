def f1(p2, p3, p4):
    t5 = -(p2)
    t6 = p3
    return (-0 if eval(input()) else (15 if False else p2))
def f7(p8, p9):
    t10 = f1(-2, (20 + p8), (p8 if True else p9))
    t11 = (7 + (p9 + 9))
    return ((10 + p8) + eval(input()))
v12 = 5
b13 = True
l14 = [f7(19, 1), (v12 + v12), [v12, v12][0]]
print(v12)
print(((v12 if b13 else v12) if l14 is l14 else v12))
