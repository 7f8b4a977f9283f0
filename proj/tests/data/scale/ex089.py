n = {0: 3, 1: 7, 2: 7}
y = eval(input())
n[y] = n[y] + 1
print(n[0] + n[1] + n[2])
print(n)
print(n[y] if n[y] != 1 else -1)
