def f1(p2):
    t3 = -p2
    t4 = (11 + (6 + 20))
    t5 = 1
    return 17
def f6(p7, p8):
    return (f1(p8) + p7)
v9 = 18
v10 = (eval(input()) + (20 if True else v9))
print(eval(input()))
print(2 + (v10 + v9))
