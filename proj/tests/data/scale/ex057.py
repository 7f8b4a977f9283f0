m = {0: 9, 1: 4, 2: 2}
x = eval(input())
m[x] = m[x] + 1
print(m[0] + m[1] + m[2])
print(m)
print(m[x] if m[x] != 1 else -1)
