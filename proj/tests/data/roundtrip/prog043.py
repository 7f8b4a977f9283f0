print(4)
print((3 + (4 + 16)))
v1 = 9
print(-4 + -v1)
print(not False and eval(input()))
l2 = [7, 19 + v1]
print(not 1 == v1)
l3 = [0, (9 + v1), eval(input()), 1]
print((v1 + v1) + v1)
